#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace mmwb::cat {

struct Histogram {
  std::map<long, long> counts;           // weight → number of correct schemes
  std::vector<std::string> incorrect;    // files that failed to parse or verify
};

/// Reads a catalog root (via index.json) or any directory of mmscheme-v1
/// files; only schemes that verify are counted.
Histogram weight_histogram(const std::filesystem::path& dir);

/// CSV with header "weight,count", ascending weight.
std::string histogram_csv(const Histogram& h);

}  // namespace mmwb::cat
