#include "oracles.hpp"

#include "mmwb/rng.hpp"

#include <algorithm>
#include <map>

namespace oracle {

using namespace mmwb;

std::string fixture(const std::string& name) { return std::string(MMWB_FIXTURE_DIR) + "/" + name; }

bool tensor_equal_target(const Scheme& s) {
  const int n = s.n(), nn = n * n;
  std::vector<mpq_class> t(static_cast<std::size_t>(nn * nn * nn), 0), e(t.size(), 0);
  auto at = [&](int a, int b, int c) { return static_cast<std::size_t>((a * nn + b) * nn + c); };
  for (const auto& x : s.summands())
    for (int a = 0; a < nn; ++a)
      for (int b = 0; b < nn; ++b)
        for (int c = 0; c < nn; ++c) t[at(a, b, c)] += x.a.entries()[a] * x.b.entries()[b] * x.c.entries()[c];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) e[at(i * n + k, k * n + j, j * n + i)] += 1;
  for (std::size_t q = 0; q < t.size(); ++q) {
    mpq_class d = t[q] - e[q];
    if (s.ring() == Ring::Z2) {
      if (d.get_den() != 1 || mpz_class(d.get_num() % 2) != 0) return false;
    } else if (d != 0) {
      return false;
    }
  }
  return true;
}

long weight_by_enumeration(const Scheme& s) {
  const int n = s.n();
  long w = 0;
  for (int k2 = 0; k2 < n; ++k2)
    for (int k1 = 0; k1 < n; ++k1)
      for (int j2 = 0; j2 < n; ++j2)
        for (int j1 = 0; j1 < n; ++j1)
          for (int i2 = 0; i2 < n; ++i2)
            for (int i1 = 0; i1 < n; ++i1)
              for (int iota = s.m() - 1; iota >= 0; --iota) {
                mpq_class p = s[iota].a(i1, i2) * s[iota].b(j1, j2) * s[iota].c(k1, k2);
                if (s.ring() == Ring::Z2) p = mpz_class(p.get_num() % 2);
                if (p != 0) ++w;
              }
  return w;
}

namespace {

mpq_class det(const std::vector<std::vector<mpq_class>>& a) {
  const std::size_t k = a.size();
  if (k == 1) return a[0][0];
  mpq_class d = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<mpq_class>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<mpq_class> row;
      for (std::size_t q = 0; q < k; ++q)
        if (q != c) row.push_back(a[r][q]);
      minor.push_back(row);
    }
    const mpq_class term = a[0][c] * det(minor);
    d += (c % 2 == 0) ? term : mpq_class(-term);
  }
  return d;
}

}  // namespace

int rank_oracle(const Mat& m, Ring r) {
  const int n = m.dim();
  if (r == Ring::Z2) {
    std::vector<unsigned> rows;
    for (int i = 0; i < n; ++i) {
      unsigned bits = 0;
      for (int j = 0; j < n; ++j)
        if (mpz_class(m(i, j).get_num() % 2) != 0) bits |= 1U << j;
      rows.push_back(bits);
    }
    std::vector<bool> seen(1U << n, false);
    int count = 0;
    for (unsigned sub = 0; sub < (1U << n); ++sub) {
      unsigned v = 0;
      for (int i = 0; i < n; ++i)
        if ((sub >> i) & 1U) v ^= rows[i];
      if (!seen[v]) {
        seen[v] = true;
        ++count;
      }
    }
    int rank = 0;
    while ((1 << rank) < count) ++rank;
    return rank;
  }
  for (int k = n; k >= 1; --k) {
    // All k×k minors via row and column subsets.
    for (unsigned rs = 0; rs < (1U << n); ++rs) {
      if (__builtin_popcount(rs) != k) continue;
      for (unsigned cs = 0; cs < (1U << n); ++cs) {
        if (__builtin_popcount(cs) != k) continue;
        std::vector<std::vector<mpq_class>> a;
        for (int i = 0; i < n; ++i) {
          if (!((rs >> i) & 1U)) continue;
          std::vector<mpq_class> row;
          for (int j = 0; j < n; ++j)
            if ((cs >> j) & 1U) row.push_back(m(i, j));
          a.push_back(row);
        }
        if (det(a) != 0) return k;
      }
    }
  }
  return 0;
}

int support_size(const Scheme& s) {
  int c = 0;
  for (const auto& t : s.summands())
    for (int f = 0; f < 3; ++f)
      for (const auto& e : t[f].entries()) c += e != 0;
  return c;
}

std::optional<std::vector<bool>> walksat(const sat::CnfFormula& f, std::vector<bool> a, std::uint64_t seed,
                                         long max_flips, double noise) {
  const auto& clauses = f.clauses();
  const std::size_t nv = static_cast<std::size_t>(f.num_vars());
  a.resize(nv, false);
  std::vector<std::vector<int>> occurs(nv + 1);
  for (std::size_t c = 0; c < clauses.size(); ++c)
    for (int lit : clauses[c]) occurs[static_cast<std::size_t>(std::abs(lit))].push_back(static_cast<int>(c));
  auto is_true = [&](int lit) { return a[static_cast<std::size_t>(std::abs(lit)) - 1] == (lit > 0); };
  std::vector<int> true_count(clauses.size(), 0);
  std::vector<int> unsat, pos_in_unsat(clauses.size(), -1);
  auto mark_unsat = [&](int c) {
    pos_in_unsat[c] = static_cast<int>(unsat.size());
    unsat.push_back(c);
  };
  auto mark_sat = [&](int c) {
    const int p = pos_in_unsat[c];
    unsat[p] = unsat.back();
    pos_in_unsat[unsat[p]] = p;
    unsat.pop_back();
    pos_in_unsat[c] = -1;
  };
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    for (int lit : clauses[c]) true_count[c] += is_true(lit);
    if (true_count[c] == 0) mark_unsat(static_cast<int>(c));
  }
  Rng rng(seed);
  auto break_count = [&](int var) {
    int b = 0;
    for (int c : occurs[static_cast<std::size_t>(var)])
      if (true_count[c] == 1)
        for (int lit : clauses[c])
          if (std::abs(lit) == var && is_true(lit)) ++b;
    return b;
  };
  auto flip = [&](int var) {
    for (int c : occurs[static_cast<std::size_t>(var)])
      for (int lit : clauses[c])
        if (std::abs(lit) == var) {
          if (is_true(lit)) {
            if (--true_count[c] == 0) mark_unsat(c);
          } else if (true_count[c]++ == 0) {
            mark_sat(c);
          }
        }
    a[static_cast<std::size_t>(var) - 1] = !a[static_cast<std::size_t>(var) - 1];
  };
  for (long step = 0; step < max_flips; ++step) {
    if (unsat.empty()) return a;
    const auto& cl = clauses[unsat[rng.below(unsat.size())]];
    int pick;
    if (static_cast<double>(rng.below(1000)) < noise * 1000) {
      pick = std::abs(cl[rng.below(cl.size())]);
    } else {
      pick = std::abs(cl[0]);
      int best = break_count(pick);
      for (int lit : cl) {
        const int b = break_count(std::abs(lit));
        if (b < best) {
          best = b;
          pick = std::abs(lit);
        }
      }
    }
    flip(pick);
  }
  if (unsat.empty()) return a;
  return std::nullopt;
}

bool raw_satisfied(const std::vector<RawEquation>& eqs, const std::vector<int>& x) {
  for (const auto& e : eqs) {
    long sum = e.constant;
    for (const auto& t : e.terms) {
      int sign = 1;
      for (int v : t.vars) sign *= x[static_cast<std::size_t>(v)];
      sum += t.coeff * sign;
    }
    if (sum != 0) return false;
  }
  return true;
}

std::vector<std::vector<int>> brute_force_signs(const std::vector<RawEquation>& eqs, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> x(static_cast<std::size_t>(k));
  for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
    for (int i = 0; i < k; ++i) x[i] = ((mask >> i) & 1U) ? -1 : 1;
    if (raw_satisfied(eqs, x)) out.push_back(x);
  }
  return out;
}

RawSystem random_raw_system(mmwb::Rng& rng, int max_vars, bool planted) {
  RawSystem out;
  out.k = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_vars - 1)));
  std::vector<int> x(static_cast<std::size_t>(out.k));
  for (auto& v : x) v = rng.coin() ? 1 : -1;
  const int count = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(out.k)));
  for (int e = 0; e < count; ++e) {
    RawEquation eq;
    const int terms = 1 + static_cast<int>(rng.below(6));
    long value = 0;
    for (int t = 0; t < terms; ++t) {
      RawTerm term{rng.coin() ? 1 : -1, {}};
      const int deg = 1 + static_cast<int>(rng.below(3));
      int sign = 1;
      for (int d = 0; d < deg; ++d) {
        const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(out.k)));
        term.vars.push_back(v);
        sign *= x[v];
      }
      value += term.coeff * sign;
      eq.terms.push_back(term);
    }
    if (planted) {
      eq.constant = -value;
    } else {
      const long c = static_cast<long>(rng.below(3)) - 1;
      eq.constant = (terms + c) % 2 == 0 ? c : c + 1;
    }
    out.eqs.push_back(eq);
  }
  return out;
}

int gamma_beta_round_nullity(const Scheme& s, int iota) {
  const int n = s.n(), nn = n * n, m = s.m();
  const int cols = nn * m;
  std::vector<std::vector<mpq_class>> rows;
  for (int idx = 0; idx < brent_count(n); ++idx) {
    const BrentIndex b = BrentIndex::from_linear(n, idx);
    std::vector<mpq_class> row(static_cast<std::size_t>(cols));
    for (int t = 0; t < m; ++t) {
      if (t == iota)
        row[t * nn + b.k1 * n + b.k2] += s[t].a(b.i1, b.i2) * s[t].b(b.j1, b.j2);
      else
        row[t * nn + b.j1 * n + b.j2] += s[t].a(b.i1, b.i2) * s[t].c(b.k1, b.k2);
    }
    rows.push_back(row);
  }
  return cols - oracle::rank_reversed_columns(rows, cols);
}

int rank_reversed_columns(std::vector<std::vector<mpq_class>> rows, int cols) {
  int rank = 0;
  for (int c = cols - 1; c >= 0; --c) {
    std::size_t p = static_cast<std::size_t>(rank);
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const mpq_class f = rows[r][c] / rows[rank][c];
      for (int q = 0; q < cols; ++q) rows[r][q] -= f * rows[rank][q];
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
