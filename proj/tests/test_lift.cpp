#include "oracles.hpp"

#include "mmwb/lift/lift.hpp"
#include "mmwb/lift/search.hpp"
#include "mmwb/lift/sign_system.hpp"
#include "mmwb/rng.hpp"
#include "mmwb/scheme_io.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace mmwb;
using namespace mmwb::lift;
using oracle::RawEquation;
using oracle::RawTerm;

namespace {

Scheme strassen_z2() { return reduce_mod2(read_scheme(oracle::fixture("strassen.json"))); }

SignPoly to_poly(const RawEquation& e) {
  SignPoly p = SignPoly::constant(e.constant);
  for (const auto& t : e.terms) {
    SignPoly m = SignPoly::constant(t.coeff);
    for (int v : t.vars) m = m * SignPoly::variable(v);
    p += m;
  }
  return p;
}

SignSystem to_system(const std::vector<RawEquation>& eqs, int k) {
  SignSystem sys;
  sys.num_vars = k;
  for (const auto& e : eqs) {
    SignPoly p = to_poly(e);
    if (!p.is_zero()) sys.equations.insert(p);
  }
  return sys;
}

std::vector<std::vector<int>> solution_set(const SignSystem& sys, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> x(static_cast<std::size_t>(k));
  for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
    for (int i = 0; i < k; ++i) x[i] = ((mask >> i) & 1U) ? -1 : 1;
    if (!satisfies(sys, x)) continue;
    // Eliminated variables are determined by the rest; check consistency.
    bool consistent = true;
    for (const auto& sub : sys.substitutions)
      consistent = consistent && sub.coeff * x[sub.var] + sub.rest.evaluate(x) == 0;
    if (consistent) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST(SignPoly, MultilinearArithmetic) {
  const SignPoly x = SignPoly::variable(0), y = SignPoly::variable(1);
  EXPECT_EQ(x * x, SignPoly::constant(1));
  EXPECT_EQ((x * y * x), y);
  EXPECT_EQ((x + y) * (x - y), SignPoly());
  const auto [f, g] = (x * y + SignPoly::variable(2, 3)).split(0);
  EXPECT_EQ(f, y);
  EXPECT_EQ(g, SignPoly::variable(2, 3));
  EXPECT_THROW(SignPoly::constant(INT64_MAX) + SignPoly::constant(1), std::overflow_error);
}

TEST(Simplify, TwoTermProductBecomesLinear) {
  SignSystem sys;
  sys.num_vars = 2;
  sys.equations.insert(SignPoly::variable(0) * SignPoly::variable(1) - SignPoly::constant(1));
  const SignSystem out = simplify_sign_system(sys);
  ASSERT_EQ(out.equations.size(), 1U);
  EXPECT_EQ(*out.equations.begin(), SignPoly::variable(0) - SignPoly::variable(1));
}

TEST(Simplify, SquaredVariableGivesContradiction) {
  const SignPoly x = SignPoly::variable(0), y = SignPoly::variable(1);
  SignSystem sys;
  sys.num_vars = 2;
  sys.equations.insert(x * x * y + y);
  const SignSystem out = simplify_sign_system(sys);
  EXPECT_TRUE(out.unsat || search_signs(out).status == SearchStatus::Unsatisfiable);
}

TEST(Simplify, VanishingProductIsUnsat) {
  SignSystem sys;
  sys.num_vars = 2;
  sys.equations.insert(SignPoly::variable(0) * SignPoly::variable(1));
  EXPECT_TRUE(simplify_sign_system(sys).unsat);
}

TEST(Eliminate, HandCheckedExample) {
  const SignPoly x = SignPoly::variable(0), y = SignPoly::variable(1), z = SignPoly::variable(2);
  SignSystem sys;
  sys.num_vars = 3;
  sys.equations.insert(x - y);
  sys.equations.insert(x * y * z + SignPoly::constant(1));
  const SignSystem out = eliminate_linear(simplify_sign_system(sys));
  EXPECT_FALSE(out.unsat);
  for (const auto& e : out.equations) EXPECT_GT(e.degree(), 1);
  const auto r = search_signs(out);
  ASSERT_EQ(r.status, SearchStatus::Found);
  EXPECT_EQ(r.assignment[2], -1);
  EXPECT_EQ(r.assignment[0], r.assignment[1]);
}

TEST(Eliminate, NoLinearEquationsUnchanged) {
  const SignPoly x = SignPoly::variable(0), y = SignPoly::variable(1), z = SignPoly::variable(2);
  SignSystem sys;
  sys.num_vars = 3;
  sys.equations.insert(x * y + y * z + x * z + SignPoly::constant(1));
  const SignSystem out = eliminate_linear(sys);
  EXPECT_EQ(out.equations, sys.equations);
  EXPECT_TRUE(out.substitutions.empty());
}

TEST(Search, EmptySystem) {
  SignSystem sys;
  const auto r = search_signs(sys);
  EXPECT_EQ(r.status, SearchStatus::Found);
  EXPECT_TRUE(r.assignment.empty());
}

TEST(Search, BudgetGivesInconclusiveNeverUnsat) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const oracle::RawSystem rs = oracle::random_raw_system(rng, 16, false);
    SearchOptions opts;
    opts.node_budget = 1;
    const auto r = search_signs(to_system(rs.eqs, rs.k), opts);
    if (r.status == SearchStatus::Unsatisfiable) {
      EXPECT_TRUE(oracle::brute_force_signs(rs.eqs, rs.k).empty());
    }
  }
  SignSystem hard;
  hard.num_vars = 4;
  SignPoly p;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) p += SignPoly::variable(i) * SignPoly::variable(j);
  hard.equations.insert(p + SignPoly::constant(2));
  SearchOptions opts;
  opts.node_budget = 0;
  EXPECT_EQ(search_signs(hard, opts).status, SearchStatus::Inconclusive);
}

TEST(Search, AgreesWithBruteForceOn200Systems) {
  Rng rng(20240);
  int sat = 0, unsat = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const oracle::RawSystem rs = oracle::random_raw_system(rng, 20, trial % 2 == 0);
    const auto brute = oracle::brute_force_signs(rs.eqs, rs.k);
    const SignSystem sys = to_system(rs.eqs, rs.k);
    const auto r = search_signs(eliminate_linear(simplify_sign_system(sys)));
    const auto direct = search_signs(sys);
    ASSERT_NE(r.status, SearchStatus::Inconclusive);
    ASSERT_EQ(r.status == SearchStatus::Found, !brute.empty()) << trial;
    ASSERT_EQ(direct.status, r.status) << trial;
    if (r.status == SearchStatus::Found) {
      ++sat;
      EXPECT_TRUE(oracle::raw_satisfied(rs.eqs, r.assignment)) << trial;
      EXPECT_TRUE(oracle::raw_satisfied(rs.eqs, direct.assignment)) << trial;
    } else {
      ++unsat;
    }
  }
  EXPECT_GE(sat, 100);
  EXPECT_GT(unsat, 10);
}

TEST(Simplify, SolutionSetsPreserved) {
  Rng rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    const oracle::RawSystem rs = oracle::random_raw_system(rng, 12, trial % 3 != 0);
    auto brute = oracle::brute_force_signs(rs.eqs, rs.k);
    const SignSystem sys = to_system(rs.eqs, rs.k);
    const SignSystem simp = simplify_sign_system(sys);
    auto s1 = simp.unsat ? std::vector<std::vector<int>>{} : solution_set(simp, rs.k);
    std::sort(brute.begin(), brute.end());
    std::sort(s1.begin(), s1.end());
    ASSERT_EQ(s1, brute) << trial;
    const SignSystem elim = eliminate_linear(simp);
    auto s2 = elim.unsat ? std::vector<std::vector<int>>{} : solution_set(elim, rs.k);
    std::sort(s2.begin(), s2.end());
    ASSERT_EQ(s2, brute) << trial;
    for (const auto& sol : s2) EXPECT_EQ(extend_solution(elim, sol), sol);
  }
}

TEST(Build, ClassicalHasNoVariables) {
  const SignSystem sys = build_sign_system(classical_scheme(3, Ring::Z2));
  // A and B are pinned; each C entry is then forced by its diagonal equation.
  EXPECT_EQ(sys.num_vars, 27);
  EXPECT_EQ(eliminate_linear(simplify_sign_system(sys)).active_vars(), 0);
  const LiftOutcome out = mmwb::lift::lift(classical_scheme(3, Ring::Z2));
  ASSERT_EQ(out.status, LiftStatus::Lifted);
  EXPECT_EQ(*out.scheme, classical_scheme(3, Ring::Int));
}

TEST(Build, StrassenVariableCount) {
  const Scheme s = strassen_z2();
  const SignSystem sys = build_sign_system(s);
  EXPECT_EQ(sys.num_vars, oracle::support_size(s) - 2 * 7);
  EXPECT_EQ(sys.num_vars, 22);
  const SignSystem elim = eliminate_linear(simplify_sign_system(sys));
  EXPECT_LT(elim.active_vars(), sys.num_vars);
}

TEST(Build, RejectsNonVerifying) {
  auto t = strassen_z2().summands();
  t.pop_back();
  EXPECT_THROW(build_sign_system(Scheme(Ring::Z2, 2, t)), FormatError);
  EXPECT_THROW(build_sign_system(read_scheme(oracle::fixture("strassen.json"))), FormatError);
}

TEST(Lift, StrassenLifts) {
  const LiftOutcome out = mmwb::lift::lift(strassen_z2());
  ASSERT_EQ(out.status, LiftStatus::Lifted);
  const Scheme& s = *out.scheme;
  EXPECT_EQ(s.ring(), Ring::Int);
  EXPECT_TRUE(verify(s).correct);
  EXPECT_TRUE(oracle::tensor_equal_target(s));
  EXPECT_EQ(reduce_mod2(s), strassen_z2());
  for (const auto& t : s.summands())
    for (int f = 0; f < 3; ++f)
      for (const auto& e : t[f].entries()) EXPECT_TRUE(e == 0 || e == 1 || e == -1);
}

TEST(Lift, Rank23SchemeIsUnliftable) {
  const Scheme s = read_scheme(oracle::fixture("rank23_z2.json"));
  const SignSystem sys = build_sign_system(s);
  EXPECT_GT(sys.num_vars, 0);
  EXPECT_FALSE(sys.equations.empty());
  const LiftOutcome out = mmwb::lift::lift(s);
  EXPECT_EQ(out.status, LiftStatus::Unliftable);
  EXPECT_GT(out.nodes, 0);
  EXPECT_LE(out.nodes, kDefaultNodeBudget);
  EXPECT_EQ(out.variables, 110);
  EXPECT_EQ(out.nodes, 126);
}
