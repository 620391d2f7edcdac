#pragma once

#include "mmwb/scheme.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace mmwb {

inline constexpr const char* kSchemeFormat = "mmscheme-v1";

Scheme scheme_from_json(const nlohmann::json& j);
nlohmann::json scheme_to_json(const Scheme& s);

/// Reads an mmscheme-v1 file. When `ab_convention` is set the file's γ
/// factors are taken to follow C=AB and are transposed on import.
Scheme read_scheme(const std::filesystem::path& path, bool ab_convention = false);
void write_scheme(const std::filesystem::path& path, const Scheme& s);

/// Compact, key-sorted serialization terminated by a newline.
std::string canonical_bytes(const Scheme& s);

nlohmann::json mat_to_json(const Mat& m, Ring r);
Mat mat_from_json(const nlohmann::json& j, int n);

nlohmann::json read_json(const std::filesystem::path& path);

}  // namespace mmwb
