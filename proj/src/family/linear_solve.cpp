#include "mmwb/family/linear_solve.hpp"

#include <algorithm>

namespace mmwb::fam {

namespace {

std::size_t row_terms(const SparseRow& r) {
  std::size_t t = 0;
  for (const auto& [c, p] : r) t += p.size();
  return t;
}

void remove_content(SparseRow& r) {
  mpz_class g = 0;
  for (const auto& [c, p] : r) g = gcd(g, p.content());
  if (g > 1)
    for (auto& [c, p] : r) p = p.divided_by(g);
}

// a·x − b·y, dropping zeros.
SparseRow combine(const SparseRow& x, const Poly& a, const SparseRow& y, const Poly& b) {
  SparseRow out;
  for (const auto& [c, p] : x) {
    Poly v = a * p;
    if (!v.is_zero()) out.emplace(c, std::move(v));
  }
  for (const auto& [c, p] : y) {
    Poly v = b * p;
    auto it = out.find(c);
    if (it == out.end()) {
      if (!v.is_zero()) out.emplace(c, -v);
    } else {
      it->second -= v;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

// Pivot ranking: constants before polynomials, then by magnitude or size.
bool better_pivot(const Poly& x, const Poly& y) {
  const bool cx = x.is_constant(), cy = y.is_constant();
  if (cx != cy) return cx;
  if (cx) return abs(x.constant_value()) < abs(y.constant_value());
  return x.size() < y.size();
}

}  // namespace

NullspaceResult nullspace(std::vector<SparseRow> rows, int cols, const EliminationLimits& limits) {
  NullspaceResult res;
  rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseRow& r) { return r.empty(); }),
             rows.end());
  for (auto& r : rows) remove_content(r);

  std::vector<bool> is_pivot_row(rows.size(), false);
  std::vector<int> pivot_row_of_col(static_cast<std::size_t>(cols), -1);
  for (int col = 0; col < cols; ++col) {
    int best = -1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (is_pivot_row[r]) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end()) continue;
      if (best < 0 || better_pivot(it->second, rows[best].at(col))) best = static_cast<int>(r);
    }
    if (best < 0) continue;
    is_pivot_row[best] = true;
    pivot_row_of_col[col] = best;
    res.pivot_columns.push_back(col);
    const SparseRow prow = rows[best];
    const Poly& p = prow.at(col);
    std::size_t total = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) != best) {
        auto it = rows[r].find(col);
        if (it != rows[r].end()) {
          const Poly e = it->second;
          if (p.is_constant() && e.is_constant()) {
            // Scale by the cofactors of the lcm to keep integer rows small.
            const mpz_class pv = p.constant_value(), ev = e.constant_value();
            const mpz_class g = gcd(pv, ev);
            rows[r] = combine(rows[r], Poly::constant(pv / g), prow, Poly::constant(ev / g));
          } else {
            rows[r] = combine(rows[r], p, prow, e);
          }
          remove_content(rows[r]);
        }
      }
      total += row_terms(rows[r]);
    }
    if (total > limits.max_terms) {
      res.diagnostic = "elimination exceeded " + std::to_string(limits.max_terms) + " terms at column " +
                       std::to_string(col);
      return res;
    }
  }

  for (int f = 0; f < cols; ++f) {
    if (pivot_row_of_col[f] >= 0) continue;
    // Scale D: lcm of constant pivots times the distinct polynomial pivots
    // of rows touching column f.
    mpz_class dconst = 1;
    std::vector<Poly> dpoly;
    for (int pc : res.pivot_columns) {
      const SparseRow& row = rows[pivot_row_of_col[pc]];
      if (!row.count(f)) continue;
      const Poly& p = row.at(pc);
      if (p.is_constant()) {
        mpz_class a = abs(p.constant_value());
        dconst = lcm(dconst, a);
      } else if (std::find(dpoly.begin(), dpoly.end(), p) == dpoly.end() &&
                 std::find(dpoly.begin(), dpoly.end(), -p) == dpoly.end()) {
        dpoly.push_back(p);
      }
    }
    Poly d = Poly::constant(dconst);
    for (const auto& p : dpoly) d = d * p;
    std::vector<Poly> v(static_cast<std::size_t>(cols));
    v[f] = d;
    for (int pc : res.pivot_columns) {
      const SparseRow& row = rows[pivot_row_of_col[pc]];
      auto it = row.find(f);
      if (it == row.end()) continue;
      auto q = divide_exact(d * it->second, row.at(pc));
      if (!q) {
        res.diagnostic = "pivot " + row.at(pc).to_string() + " does not divide the back-substitution at column " +
                         std::to_string(pc);
        return res;
      }
      v[pc] = -*q;
    }
    // Strip common polynomial pivot factors, then the integer content.
    for (const auto& p : dpoly) {
      while (true) {
        std::vector<Poly> w;
        bool divisible = true;
        for (const auto& e : v) {
          if (e.is_zero()) {
            w.emplace_back();
            continue;
          }
          auto q = divide_exact(e, p);
          if (!q) {
            divisible = false;
            break;
          }
          w.push_back(std::move(*q));
        }
        if (!divisible) break;
        v = std::move(w);
      }
    }
    mpz_class g = 0;
    for (const auto& e : v) g = gcd(g, e.content());
    if (g > 1)
      for (auto& e : v) e = e.divided_by(g);
    res.basis.push_back(std::move(v));
  }
  res.ok = true;
  return res;
}

}  // namespace mmwb::fam
