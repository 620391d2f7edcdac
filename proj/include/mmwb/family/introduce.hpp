#pragma once

#include "mmwb/family/linear_solve.hpp"
#include "mmwb/family/param_scheme.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mmwb::fam {

/// Factor tags: 0 = α (A), 1 = β (B), 2 = γ (C).
int parse_factor(std::string_view tag);
std::string_view factor_name(int f);

/// Unknown j is entry (row, col) of `factor` in summand `summand`.
struct Unknown {
  int summand, factor, row, col;
};

struct IntroduceSystem {
  std::vector<Unknown> unknowns;
  std::vector<SparseRow> rows;  // one per Brent index, homogeneous part
  std::vector<int> rhs;         // target-tensor coefficient per row
};

/// Linear system obtained by freeing factor u of summand ι and factor v of
/// every other summand in the Brent equations.
IntroduceSystem build_introduce_system(const ParamScheme& f, int iota, int u, int v);

struct IntroduceResult {
  std::optional<ParamScheme> family;  // absent when the round is rejected
  int added = 0;
  std::string diagnostic;
};

/// One round: the current entries are the particular solution, and each
/// nullspace basis vector gets one fresh parameter x_{k+1}, x_{k+2}, ….
/// The input must verify exactly.
IntroduceResult introduce_parameters(const ParamScheme& f, int iota, int u, int v,
                                     const EliminationLimits& limits = {});

enum class SweepOrder { Forward, Backward, TransposedLoops };
SweepOrder parse_sweep_order(std::string_view name);

/// The six (u, v) choices in sweep order.
inline constexpr std::array<std::pair<int, int>, 6> kFactorPairs{
    {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}};

struct SweepRound {
  int iota, u, v, added;
};

struct SweepResult {
  ParamScheme family;
  std::vector<SweepRound> rounds;        // rounds that added parameters
  std::vector<std::string> rejections;   // diagnostics of rejected rounds
};

/// For each summand, tries the (u, v) choices in order and keeps the first
/// round that adds parameters; TransposedLoops swaps the two loops.
SweepResult introduce_parameters_sweep(const ParamScheme& f, SweepOrder order,
                                       const EliminationLimits& limits = {});

}  // namespace mmwb::fam
