#pragma once

#include "mmwb/lift/search.hpp"
#include "mmwb/scheme.hpp"

#include <optional>

namespace mmwb::lift {

enum class LiftStatus { Lifted, Unliftable, Inconclusive };

struct LiftOutcome {
  LiftStatus status = LiftStatus::Inconclusive;
  std::optional<Scheme> scheme;  // Int scheme with entries in {−1, 0, 1}
  long nodes = 0;
  int variables = 0;             // sign variables before elimination
  int remaining = 0;             // active variables after elimination
};

/// build → simplify → eliminate → search.
LiftOutcome lift(const Scheme& s, const SearchOptions& opts = {});

}  // namespace mmwb::lift
