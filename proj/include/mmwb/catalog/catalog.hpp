#pragma once

#include "mmwb/scheme.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace mmwb::cat {

/// Environment variable naming the catalog root.
inline constexpr const char* kCatalogEnv = "MMWB_CATALOG";

struct CatalogRecord {
  std::string id;    // SHA-256 of the canonical file bytes, hex
  std::string path;  // relative to the catalog root
  Ring ring = Ring::Z2;
  int n = 0, m = 0;
  long weight = 0;
  std::string invariant_key;

  friend bool operator==(const CatalogRecord&, const CatalogRecord&) = default;
};

nlohmann::json record_to_json(const CatalogRecord& r);
CatalogRecord record_from_json(const nlohmann::json& j);

/// Summands sorted by their canonical JSON encoding.
Scheme sort_summands(const Scheme& s);
/// Canonical file bytes of the summand-sorted scheme.
std::string canonical_file(const Scheme& s);
std::string sha256_hex(const std::string& bytes);
std::string scheme_id(const Scheme& s);

/// A directory with index.json and schemes/<id>.json. Writers serialize
/// through an flock on <root>/.lock; readers do not lock.
class Catalog {
 public:
  explicit Catalog(std::filesystem::path root);

  /// $MMWB_CATALOG, or "./catalog".
  static std::filesystem::path default_root();

  const std::filesystem::path& root() const { return root_; }

  struct AddResult {
    CatalogRecord record;
    bool inserted;  // false when the id was already present
  };
  /// Rejects schemes that do not verify.
  AddResult add(const Scheme& s);

  std::vector<CatalogRecord> records() const;
  Scheme load(const CatalogRecord& r) const;

 private:
  std::filesystem::path root_;
};

}  // namespace mmwb::cat
