#pragma once

#include "mmwb/scheme.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace mmwb::cat {

struct DedupClass {
  int representative;        // input index of the first member
  std::vector<int> members;  // input indices, ascending
  std::string invariant_key;
};

struct DedupResult {
  std::vector<DedupClass> classes;  // ordered by representative
  long equivalence_calls = 0;
};

/// Buckets by invariant key, then decides equivalence pairwise against the
/// class representatives of the bucket. Non-Z2 schemes are compared through
/// their reductions mod 2. Buckets are processed on `threads` workers
/// (0 = hardware concurrency).
DedupResult dedup_catalog(const std::vector<Scheme>& schemes, unsigned threads = 0);

/// Rows (polynomial, class count) per invariant polynomial, ordered by
/// ascending count and then by polynomial text.
using InvariantTable = std::vector<std::pair<std::string, long>>;
std::array<InvariantTable, 3> invariant_tables(const std::vector<Scheme>& representatives);

/// "polynomial,count" CSV for one table.
std::string table_csv(const InvariantTable& t);

}  // namespace mmwb::cat
