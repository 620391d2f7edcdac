#pragma once

// Independent reference implementations used only by the tests.

#include "mmwb/rng.hpp"
#include "mmwb/sat/cnf.hpp"
#include "mmwb/scheme.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

std::string fixture(const std::string& name);

/// Builds Σ A⊗B⊗C entrywise and compares it to Σ E_ik⊗E_kj⊗E_ji built
/// from its definition; entries are reduced into the ring first.
bool tensor_equal_target(const mmwb::Scheme& s);

/// Counts nonzero α·β·γ products with the summand loop innermost.
long weight_by_enumeration(const mmwb::Scheme& s);

/// Z2: log2 of the row-space size found by enumerating all row subsets.
/// Q: size of the largest nonvanishing minor (cofactor determinants).
int rank_oracle(const mmwb::Mat& m, mmwb::Ring r);

/// Support size: number of nonzero entries over all factors.
int support_size(const mmwb::Scheme& s);

/// Seeded WalkSAT from a starting assignment; returns a satisfying
/// assignment or nullopt after `max_flips`.
std::optional<std::vector<bool>> walksat(const mmwb::sat::CnfFormula& f, std::vector<bool> start,
                                         std::uint64_t seed, long max_flips, double noise = 0.4);

/// Raw sign equation Σ c·Π x_v + constant = 0 as generated by the tests.
struct RawTerm {
  int coeff;
  std::vector<int> vars;  // may repeat; x² = 1
};
struct RawEquation {
  std::vector<RawTerm> terms;
  long constant = 0;
};

/// Enumerates all {−1,+1}^k assignments; returns the satisfying ones.
std::vector<std::vector<int>> brute_force_signs(const std::vector<RawEquation>& eqs, int k);
bool raw_satisfied(const std::vector<RawEquation>& eqs, const std::vector<int>& x);

struct RawSystem {
  std::vector<RawEquation> eqs;
  int k;  // variable count
};

/// Brent-like random equations: unit coefficients on products of up to three
/// variables (repeats allowed). Planted systems are satisfied by a hidden
/// assignment; the others get small constants of matching parity.
RawSystem random_raw_system(mmwb::Rng& rng, int max_vars, bool planted);

/// Rank of a rational matrix by elimination over the columns in reverse order.
int rank_reversed_columns(std::vector<std::vector<mpq_class>> rows, int cols);

/// Nullity of the linear system in the γ entries of summand `iota` and the
/// β entries of every other summand, assembled directly from the Brent sums.
int gamma_beta_round_nullity(const mmwb::Scheme& s, int iota);

}  // namespace oracle
