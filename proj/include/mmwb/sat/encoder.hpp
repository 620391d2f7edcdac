#pragma once

#include "mmwb/scheme.hpp"
#include "mmwb/sat/cnf.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace mmwb::sat {

enum class EncodingMode { Parity, ZeroOrTwo };

/// Pin a fraction of α/β/γ variables to their values in a known Z2 scheme.
struct KnownFixes {
  Scheme known;
  double fraction = 0.5;
};

struct StreamlinePlan {
  EncodingMode mode = EncodingMode::Parity;
  std::optional<KnownFixes> fixes;
  /// Fraction of fully off-diagonal t variables forced to zero.
  std::optional<double> offdiag_zero_fraction;
  /// Summand for each diagonal term; term id is (i1*n + j1)*n + k1.
  std::optional<std::vector<int>> diag_distribution;
  std::uint64_t seed = 0;
};

/// How an auxiliary variable is determined by earlier literals; used to
/// extend an α/β/γ assignment to a full model.
struct AuxDefinition {
  enum class Kind { Parity3, AtMostTwoY, AtMostTwoZ };
  int var;
  Kind kind;
  std::array<int, 4> lits;  // Parity3 uses the first three
};

struct Encoding {
  CnfFormula formula;
  VarMap varmap;
  std::vector<AuxDefinition> aux;
  int equations = 0;
  int unit_clauses = 0;
};

/// Random distribution of the n³ diagonal terms over m summands, each summand
/// receiving one or two. Requires m ≤ n³ ≤ 2m.
std::vector<int> random_diag_distribution(int n, int m, std::uint64_t seed);

/// Checks that every summand receives one or two diagonal terms.
void validate_diag_distribution(int n, int m, const std::vector<int>& dist);

Encoding encode_brent(int n, int m, const StreamlinePlan& plan);

std::vector<Clause> apply_streamline(const StreamlinePlan& plan, const VarMap& varmap);

/// CNF for "an even number of lits are true", four literals per chunk with
/// fresh auxiliaries carrying the partial parity.
void encode_even(CnfFormula& f, VarMap& vm, std::vector<AuxDefinition>& aux,
                 std::vector<int> lits, int equation, int& counter);
void encode_at_most_two(CnfFormula& f, VarMap& vm, std::vector<AuxDefinition>& aux,
                        std::vector<int> lits, int equation, int& counter);
void encode_not_exactly_one(CnfFormula& f, const std::vector<int>& lits);

/// Clauses of even(a,b,c,d) for up to four literals.
std::vector<Clause> even_chunk(const std::vector<int>& lits);

}  // namespace mmwb::sat
