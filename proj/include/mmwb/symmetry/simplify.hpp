#pragma once

#include "mmwb/symmetry/group.hpp"

#include <cstdint>

namespace mmwb::sym {

struct SimplifyResult {
  Scheme scheme;
  GroupElement applied;  // apply_group(applied, input) = scheme
  long initial_weight = 0;
  long final_weight = 0;
  long improvements = 0;
};

/// Hill climbing: each iteration samples a random g and keeps g(S) when the
/// weight strictly drops. Deterministic given the seed.
SimplifyResult simplify_weight(const Scheme& s, long iterations, std::uint64_t seed);

}  // namespace mmwb::sym
