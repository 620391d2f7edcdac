#pragma once

#include "mmwb/lift/sign_poly.hpp"
#include "mmwb/scheme.hpp"

#include <set>
#include <vector>

namespace mmwb::lift {

/// A support position of the Z2 scheme: factor 0/1/2 of summand ι at (row, col).
struct Position {
  int factor, summand, row, col;
  friend bool operator==(const Position&, const Position&) = default;
};

/// Records c·x_var + rest = 0, used to extend solutions back to x_var.
struct Substitution {
  int var;
  std::int64_t coeff;
  SignPoly rest;
};

/// Polynomial equations p = 0 over variables in {−1, +1}.
struct SignSystem {
  int num_vars = 0;
  std::vector<Position> variables;   // variable id → support position
  std::vector<Position> normalized;  // positions fixed to +1
  std::set<SignPoly> equations;
  std::vector<Substitution> substitutions;
  bool unsat = false;

  /// Number of variables neither eliminated nor absent from every equation.
  int active_vars() const;
};

/// Brent equations over Int restricted to the support of a correct Z2 scheme,
/// after fixing the first nonzero entry (row-major) of every A and B to +1.
SignSystem build_sign_system(const Scheme& s);

/// Variable-factor cancellation, content removal, the two-term rewrite
/// a·M1 + b·M2 → M1·M2 = −b/a (and x·y = ±1 → x ∓ y), to fixpoint. Flags
/// single-term, parity and magnitude contradictions.
SignSystem simplify_sign_system(SignSystem sys);

/// Repeatedly solves a degree-one equation for one variable (preferring unit
/// coefficients, then lowest id), substitutes it everywhere, adds the domain
/// constraint rest² = c², and re-simplifies.
SignSystem eliminate_linear(SignSystem sys);

/// Extends values of the remaining variables (±1, or 0 for "unset", which is
/// then taken as +1) through the recorded substitutions.
std::vector<int> extend_solution(const SignSystem& sys, std::vector<int> values);

bool satisfies(const SignSystem& sys, const std::vector<int>& values);

/// Applies a ±1 assignment (indexed by id) to the support of s.
Scheme assign_signs(const Scheme& s, const SignSystem& sys, const std::vector<int>& values);

}  // namespace mmwb::lift
