#pragma once

#include "mmwb/lift/sign_system.hpp"

#include <functional>
#include <optional>

namespace mmwb::lift {

inline constexpr long kDefaultNodeBudget = 100'000'000;

enum class SearchStatus { Found, Unsatisfiable, Inconclusive };

struct SearchResult {
  SearchStatus status = SearchStatus::Inconclusive;
  std::vector<int> assignment;  // ±1 per variable id when found
  long nodes = 0;
};

/// Called every `progress_interval` nodes with the running node count.
struct SearchOptions {
  long node_budget = kDefaultNodeBudget;
  long progress_interval = 1'000'000;
  std::function<void(long)> progress;
};

/// Complete backtracking over {−1, +1}: branch on the variable occurring in
/// the most equations (ties to the lowest id), +1 first, propagating with
/// simplify and eliminate after each decision.
SearchResult search_signs(const SignSystem& sys, const SearchOptions& opts = {});

}  // namespace mmwb::lift
