#include "oracles.hpp"

#include "mmwb/family/introduce.hpp"
#include "mmwb/family/merge.hpp"
#include "mmwb/family/param_scheme.hpp"
#include "mmwb/rng.hpp"
#include "mmwb/scheme_io.hpp"

#include <gtest/gtest.h>

using namespace mmwb;
using namespace mmwb::fam;

namespace {

ParamScheme family17() { return read_family(oracle::fixture("family17.json")); }
Scheme strassen() { return read_scheme(oracle::fixture("strassen.json")); }

std::vector<mpz_class> zeros(int k) { return std::vector<mpz_class>(static_cast<std::size_t>(k), 0); }

}  // namespace

TEST(Poly, ParsePrintRoundTrip) {
  PolyParser p(3);
  EXPECT_EQ(p.parse("x1^2*x3 - 2*x2 + 1").to_string(), "x1^2*x3 - 2*x2 + 1");
  EXPECT_EQ(p.parse("(x1+1)^2").to_string(), "x1^2 + 2*x1 + 1");
  EXPECT_EQ(p.parse("x2*x1 - x1*x2").to_string(), "0");
  EXPECT_EQ(p.parse("-(x3 - x1)*3").to_string(), "3*x1 - 3*x3");
  for (const char* s : {"x1^2*x3 - 2*x2 + 1", "-x1*x2^3 + x3", "7"})
    EXPECT_EQ(p.parse(p.parse(s).to_string()), p.parse(s));
  EXPECT_THROW(p.parse("x4"), FormatError);
  EXPECT_THROW(p.parse("x1 +"), FormatError);
  EXPECT_THROW(p.parse("(x1"), FormatError);
}

TEST(Poly, MacrosAndCycles) {
  PolyParser p(5, {{"x1_4", "x1*x4+1"}, {"p", "x5*x1_4 + x1"}});
  EXPECT_EQ(p.parse("p"), p.parse("x1*x4*x5 + x5 + x1"));
  PolyParser cyc(2, {{"a", "b + x1"}, {"b", "a*x2"}});
  EXPECT_THROW(cyc.parse("a"), FormatError);
  EXPECT_THROW(p.parse("q"), FormatError);
}

TEST(Poly, ExactDivision) {
  PolyParser p(2);
  const auto q = divide_exact(p.parse("x1^2 - x2^2"), p.parse("x1 + x2"));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, p.parse("x1 - x2"));
  EXPECT_FALSE(divide_exact(p.parse("x1^2 + 1"), p.parse("x1 + 1")));
  const std::vector<mpz_class> pt{3, -2};
  EXPECT_EQ(p.parse("x1^3*x2 - 5").evaluate(pt), -59);
}

TEST(Family, Rank23VerifiesExactly) {
  const ParamScheme f = family17();
  EXPECT_EQ(f.params(), 17);
  EXPECT_EQ(f.m(), 23);
  const FamilyReport r = verify_family_exact(f);
  EXPECT_TRUE(r.correct);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Family, SingleSignPerturbationRejected) {
  ParamScheme f = family17();
  Poly& e = f.entry(2, 0, 0, 0);
  ASSERT_FALSE(e.is_zero());
  e = -e;
  const FamilyReport r = verify_family_exact(f);
  EXPECT_FALSE(r.correct);
  ASSERT_FALSE(r.violations.empty());
  for (const auto& idx : r.violations) EXPECT_FALSE(family_residual(f, idx).is_zero());
  // The perturbed entry sits in row 0, column 0 of an A factor.
  EXPECT_EQ(r.violations.front().i1, 0);
  EXPECT_EQ(r.violations.front().i2, 0);
}

TEST(Family, RandomIntegerPointsVerify) {
  const ParamScheme f = family17();
  Rng rng(1717);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<mpz_class> pt;
    for (int i = 0; i < 17; ++i) pt.push_back(static_cast<long>(rng.below(21)) - 10);
    const Scheme s = substitute_family(f, pt);
    ASSERT_TRUE(verify(s).correct) << trial;
  }
  const Scheme z = substitute_family(f, zeros(17));
  EXPECT_TRUE(verify(z).correct);
  EXPECT_TRUE(oracle::tensor_equal_target(z));
  EXPECT_THROW(substitute_family(f, zeros(16)), FormatError);
}

TEST(Family, ZeroParameterFamilyIsTheScheme) {
  const Scheme s = strassen();
  const ParamScheme f = family_from_scheme(s);
  EXPECT_EQ(f.params(), 0);
  EXPECT_EQ(substitute_family(f, {}), s);
  EXPECT_TRUE(verify_family_exact(f).correct);
  auto t = s.summands();
  t[0].a(0, 0) = 0;
  EXPECT_EQ(verify_family_exact(family_from_scheme(Scheme(Ring::Int, 2, t))).violations,
            verify(Scheme(Ring::Int, 2, t)).violations);
}

TEST(Family, JsonRoundTrip) {
  const ParamScheme f = family17();
  EXPECT_EQ(family_from_json(family_to_json(f)), f);
}

TEST(Introduce, ClassicalRoundMatchesIndependentNullity) {
  const Scheme s = classical_scheme(3, Ring::Rat);
  const int expected = oracle::gamma_beta_round_nullity(s, 0);
  const IntroduceResult r = introduce_parameters(family_from_scheme(s), 0, parse_factor("gamma"),
                                                 parse_factor("beta"));
  ASSERT_TRUE(r.family) << r.diagnostic;
  EXPECT_EQ(r.added, expected);
  EXPECT_EQ(r.family->params(), expected);
  EXPECT_GT(expected, 0);
  EXPECT_TRUE(verify_family_exact(*r.family).correct);
  EXPECT_EQ(substitute_family(*r.family, zeros(r.family->params())), s.ring() == Ring::Rat
                                                                          ? change_ring(s, Ring::Int)
                                                                          : s);
}

TEST(Introduce, SystemShape) {
  const IntroduceSystem sys = build_introduce_system(family_from_scheme(classical_scheme(3, Ring::Rat)), 0, 2, 1);
  EXPECT_EQ(sys.unknowns.size(), 9U * 27);
  EXPECT_EQ(sys.rows.size(), 729U);
  EXPECT_THROW(build_introduce_system(family_from_scheme(strassen()), 0, 1, 1), FormatError);
  EXPECT_THROW(parse_factor("delta"), FormatError);
}

TEST(Introduce, RoundsOnAFamilyKeepEarlierParameters) {
  const ParamScheme z = family_from_scheme(strassen());
  const IntroduceResult r1 = introduce_parameters(z, 0, 0, 1);
  ASSERT_TRUE(r1.family) << r1.diagnostic;
  const IntroduceResult r2 = introduce_parameters(*r1.family, 3, 2, 0);
  if (r2.family) {
    EXPECT_EQ(r2.family->params(), r1.family->params() + r2.added);
    EXPECT_TRUE(verify_family_exact(*r2.family).correct);
    std::vector<mpz_class> pt(static_cast<std::size_t>(r2.family->params()), 0);
    for (int i = 0; i < r1.family->params(); ++i) pt[i] = 1;
    EXPECT_TRUE(verify(substitute_family(*r2.family, pt)).correct);
  } else {
    EXPECT_FALSE(r2.diagnostic.empty());
  }
}

TEST(Sweep, Rank23SpecializationRecoversParameters) {
  const Scheme s0 = substitute_family(family17(), zeros(17));
  for (const char* name : {"forward", "backward", "transposed-loops"}) {
    const SweepResult r = introduce_parameters_sweep(family_from_scheme(s0), parse_sweep_order(name));
    EXPECT_GE(r.family.params(), 1) << name;
    EXPECT_TRUE(verify_family_exact(r.family).correct) << name;
    int total = 0;
    for (const auto& round : r.rounds) {
      EXPECT_GT(round.added, 0);
      total += round.added;
    }
    EXPECT_EQ(total, r.family.params());
    EXPECT_TRUE(verify(substitute_family(r.family, zeros(r.family.params()))).correct);
  }
  EXPECT_THROW(parse_sweep_order("sideways"), FormatError);
}

TEST(Merge, SplitSummandMergesBack) {
  const Scheme s = strassen();
  Rng rng(5);
  for (int i = 0; i < s.m(); ++i) {
    auto t = s.summands();
    Mat c1(2);
    for (auto& e : c1.entries()) e = static_cast<long>(rng.below(3)) - 1;
    if (c1 == t[i].c || c1.is_zero()) c1(0, 0) += 1;
    const Mat c2 = t[i].c + mpq_class(-1) * c1;
    t[i].c = c1;
    t.push_back({s[i].a, s[i].b, c2});
    const Scheme split(Ring::Int, 2, t);
    ASSERT_TRUE(verify(split).correct);
    const auto r = merge_reduction(split);
    ASSERT_TRUE(r) << i;
    EXPECT_EQ(r->scheme.m(), 7);
    EXPECT_TRUE(verify(r->scheme).correct);
    EXPECT_FALSE(merge_reduction(r->scheme));
  }
}

TEST(Merge, TerminatesOnRepeatedApplication) {
  auto t = strassen().summands();
  for (int k = 0; k < 3; ++k) {
    Summand x = t[k];
    t[k].c = mpq_class(2) * x.c;
    t.push_back({x.a, x.b, mpq_class(-1) * x.c});
  }
  Scheme s(Ring::Int, 2, t);
  ASSERT_TRUE(verify(s).correct);
  int steps = 0;
  while (auto r = merge_reduction(s)) {
    ASSERT_EQ(r->scheme.m(), s.m() - 1);
    ASSERT_TRUE(verify(r->scheme).correct);
    s = r->scheme;
    ++steps;
  }
  EXPECT_EQ(steps, 3);
  EXPECT_EQ(s.m(), 7);
}

TEST(Merge, NoReductionOnFixtures) {
  EXPECT_FALSE(merge_reduction(strassen()));
  EXPECT_FALSE(merge_reduction(reduce_mod2(strassen())));
  EXPECT_FALSE(merge_reduction(read_scheme(oracle::fixture("rank23_z2.json"))));
  EXPECT_FALSE(merge_reduction(classical_scheme(2, Ring::Int)));
}

TEST(Merge, Z2SplitMergesBack) {
  const Scheme s = read_scheme(oracle::fixture("rank23_z2.json"));
  auto t = s.summands();
  Mat c1 = t[4].c;
  c1(1, 1) += 1;
  const Mat c2 = t[4].c + c1;
  t[4].c = c1.normalized(Ring::Z2);
  t.push_back({s[4].a, s[4].b, c2.normalized(Ring::Z2)});
  const Scheme split(Ring::Z2, 3, t);
  ASSERT_TRUE(verify(split).correct);
  const auto r = merge_reduction(split);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->scheme.m(), 23);
  EXPECT_TRUE(verify(r->scheme).correct);
}
