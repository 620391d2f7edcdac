#pragma once

#include "mmwb/symmetry/group.hpp"

#include <optional>

namespace mmwb::sym {

struct EquivalenceStats {
  long nodes = 0;        // recursive matching attempts
  long enumerated = 0;   // subspace points tested for invertibility
  int max_dim = 0;       // largest intersected subspace seen
  bool key_mismatch = false;
};

/// Largest subspace dimension searched exhaustively; beyond it the search aborts.
inline constexpr int kMaxEnumerationDim = 20;

/// Returns g with apply_group(g, s1) = s2 up to summand order, or nullopt
/// when no such element exists. Both schemes must be over Z2 with equal (n, m).
std::optional<GroupElement> equivalent(const Scheme& s1, const Scheme& s2,
                                       EquivalenceStats* stats = nullptr);

}  // namespace mmwb::sym
