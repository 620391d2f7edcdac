#include "mmwb/scheme.hpp"

#include <algorithm>
#include <utility>

namespace mmwb {

void check_dimension(int n) {
  if (n != 2 && n != 3) {
    throw FormatError("unsupported dimension " + std::to_string(n) +
                      " (expected 2 or 3)");
  }
}

Scheme::Scheme(Ring ring, int n, std::vector<Summand> summands)
    : ring_(ring), n_(n), summands_(std::move(summands)) {
  check_dimension(n);
  if (summands_.empty()) throw FormatError("scheme has no summands");
  for (auto& s : summands_) {
    for (int f = 0; f < 3; ++f) {
      if (s[f].dim() != n) throw FormatError("factor dimension mismatch");
      for (const auto& v : s[f].entries()) {
        if (!is_member(ring, v)) {
          throw FormatError("entry " + v.get_str() + " is not in ring " +
                            std::string(ring_name(ring)));
        }
      }
      s[f] = s[f].normalized(ring);
    }
  }
}

BrentIndex BrentIndex::from_linear(int n, int idx) {
  BrentIndex b{};
  b.k2 = idx % n; idx /= n;
  b.k1 = idx % n; idx /= n;
  b.j2 = idx % n; idx /= n;
  b.j1 = idx % n; idx /= n;
  b.i2 = idx % n; idx /= n;
  b.i1 = idx;
  return b;
}

Scheme classical_scheme(int n, Ring ring) {
  check_dimension(n);
  std::vector<Summand> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        out.push_back({Mat::unit(n, i, k), Mat::unit(n, k, j), Mat::unit(n, j, i)});
  return Scheme(ring, n, std::move(out));
}

std::vector<mpq_class> brent_sums(const Scheme& s) {
  const int n = s.n();
  const int nn = n * n;
  std::vector<mpq_class> sums(static_cast<std::size_t>(brent_count(n)));
  mpq_class ab;
  for (const auto& t : s.summands()) {
    for (int p = 0; p < nn; ++p) {
      const mpq_class& av = t.a.entries()[p];
      if (av == 0) continue;
      for (int q = 0; q < nn; ++q) {
        const mpq_class& bv = t.b.entries()[q];
        if (bv == 0) continue;
        ab = av * bv;
        const int base = (p * nn + q) * nn;
        for (int r = 0; r < nn; ++r) {
          const mpq_class& cv = t.c.entries()[r];
          if (cv != 0) sums[base + r] += ab * cv;
        }
      }
    }
  }
  if (s.ring() == Ring::Z2)
    for (auto& v : sums) v = normalize(Ring::Z2, v);
  return sums;
}

VerifyReport verify(const Scheme& s) {
  const auto sums = brent_sums(s);
  VerifyReport rep;
  for (int idx = 0; idx < static_cast<int>(sums.size()); ++idx) {
    const BrentIndex b = BrentIndex::from_linear(s.n(), idx);
    if (sums[idx] != b.rhs()) rep.violations.push_back(b);
  }
  rep.correct = rep.violations.empty();
  return rep;
}

mpq_class brent_residual(const Scheme& s, const BrentIndex& idx) {
  const int n = s.n();
  for (int v : {idx.i1, idx.i2, idx.j1, idx.j2, idx.k1, idx.k2}) {
    if (v < 0 || v >= n) throw FormatError("Brent index out of range");
  }
  mpq_class sum;
  for (const auto& t : s.summands())
    sum += t.a(idx.i1, idx.i2) * t.b(idx.j1, idx.j2) * t.c(idx.k1, idx.k2);
  return normalize(s.ring(), sum - idx.rhs());
}

long weight(const Scheme& s) {
  long w = 0;
  for (const auto& t : s.summands())
    w += static_cast<long>(t.a.nnz()) * t.b.nnz() * t.c.nnz();
  return w;
}

std::vector<RankTriple> rank_profile(const Scheme& s) {
  std::vector<RankTriple> out;
  out.reserve(s.summands().size());
  for (const auto& t : s.summands())
    out.emplace_back(rank(t.a, s.ring()), rank(t.b, s.ring()), rank(t.c, s.ring()));
  std::sort(out.begin(), out.end());
  return out;
}

Scheme scale_summand(const Scheme& s, int i, const mpq_class& la,
                     const mpq_class& lb, const mpq_class& lc) {
  if (i < 0 || i >= s.m()) throw FormatError("summand index out of range");
  const Ring r = s.ring();
  for (const auto* l : {&la, &lb, &lc}) {
    if (!is_member(r, *l) || !is_unit(r, normalize(r, *l))) {
      throw FormatError("scale factor " + l->get_str() + " is not a unit");
    }
  }
  if (normalize(r, la * lb * lc) != 1) {
    throw FormatError("scale factors must multiply to one");
  }
  auto summands = s.summands();
  summands[i].a = la * summands[i].a;
  summands[i].b = lb * summands[i].b;
  summands[i].c = lc * summands[i].c;
  if (r == Ring::Z2) {
    for (int f = 0; f < 3; ++f) summands[i][f] = summands[i][f].normalized(r);
  }
  return Scheme(r, s.n(), std::move(summands));
}

Scheme reduce_mod2(const Scheme& s) {
  if (s.ring() == Ring::Rat) {
    for (const auto& t : s.summands())
      for (int f = 0; f < 3; ++f)
        for (const auto& v : t[f].entries())
          if (v.get_den() != 1) throw FormatError("cannot reduce a fraction mod 2");
  }
  auto summands = s.summands();
  for (auto& t : summands)
    for (int f = 0; f < 3; ++f) t[f] = t[f].normalized(Ring::Z2);
  return Scheme(Ring::Z2, s.n(), std::move(summands));
}

Scheme transpose_gamma(const Scheme& s) {
  auto summands = s.summands();
  for (auto& t : summands) t.c = t.c.transposed();
  return Scheme(s.ring(), s.n(), std::move(summands));
}

Scheme change_ring(const Scheme& s, Ring ring) {
  if (ring == Ring::Z2) return reduce_mod2(s);
  return Scheme(ring, s.n(), s.summands());
}

}  // namespace mmwb
