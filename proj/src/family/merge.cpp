#include "mmwb/family/merge.hpp"

#include <algorithm>
#include <map>

namespace mmwb::fam {

namespace {

// Scalar μ with x = μ·key(x); the key is unique per line through x.
std::pair<Mat, mpq_class> split_scalar(const Mat& x, Ring ring) {
  mpq_class mu = 0;
  for (const auto& e : x.entries())
    if (e != 0) {
      mu = e;
      break;
    }
  if (ring == Ring::Z2) return {x, 1};
  if (ring == Ring::Int) {
    mpz_class g = 0;
    for (const auto& e : x.entries()) g = gcd(g, mpz_class(e.get_num()));
    mu = mu < 0 ? mpq_class(-g) : mpq_class(g);
  }
  Mat key = x;
  for (auto& e : key.entries()) e /= mu;
  return {key, mu};
}

// Coefficients β with Σ β_j cols[j] = target, or nullopt; free variables 0.
std::optional<std::vector<mpq_class>> solve_combination(const std::vector<std::vector<mpq_class>>& cols,
                                                        const std::vector<mpq_class>& target, bool mod2) {
  const std::size_t rows = target.size(), k = cols.size();
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(k + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < k; ++j) a[r][j] = cols[j][r];
    a[r][k] = target[r];
  }
  auto reduce = [&](mpq_class& v) {
    if (mod2) v = (v.get_num() % 2 != 0) ? 1 : 0;
  };
  for (auto& row : a)
    for (auto& v : row) reduce(v);
  std::vector<int> pivot_col_of_row;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const mpq_class inv = 1 / a[r][c];
    for (auto& v : a[r]) {
      v *= inv;
      reduce(v);
    }
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || a[q][c] == 0) continue;
      const mpq_class f = a[q][c];
      for (std::size_t j = 0; j <= k; ++j) {
        a[q][j] -= f * a[r][j];
        reduce(a[q][j]);
      }
    }
    pivot_col_of_row.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t q = r; q < rows; ++q)
    if (a[q][k] != 0) return std::nullopt;
  std::vector<mpq_class> beta(k, 0);
  for (std::size_t q = 0; q < r; ++q) beta[pivot_col_of_row[q]] = a[q][k];
  return beta;
}

}  // namespace

std::optional<MergeResult> merge_reduction(const Scheme& s) {
  const Ring ring = s.ring();
  const int m = s.m();
  if (m < 2) return std::nullopt;
  for (int shared = 0; shared < 3; ++shared) {
    // Group summands by the line through their matrix in `shared`.
    std::vector<std::pair<Mat, std::vector<int>>> groups;
    std::vector<mpq_class> mu(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
      if (s[i][shared].is_zero()) continue;
      auto [key, scale] = split_scalar(s[i][shared], ring);
      mu[i] = scale;
      auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == key; });
      if (it == groups.end()) groups.push_back({key, {i}});
      else it->second.push_back(i);
    }
    for (const auto& [key, members] : groups) {
      if (members.size() < 2) continue;
      for (int dependent = 0; dependent < 3; ++dependent) {
        if (dependent == shared) continue;
        const int folded = 3 - shared - dependent;
        for (int victim : members) {
          std::vector<std::vector<mpq_class>> cols;
          std::vector<int> others;
          for (int j : members) {
            if (j == victim) continue;
            others.push_back(j);
            std::vector<mpq_class> col;
            for (const auto& e : s[j][dependent].entries()) col.push_back(mu[j] * e);
            cols.push_back(std::move(col));
          }
          std::vector<mpq_class> target;
          for (const auto& e : s[victim][dependent].entries()) target.push_back(mu[victim] * e);
          auto beta = solve_combination(cols, target, ring == Ring::Z2);
          if (!beta) continue;
          if (ring == Ring::Int) {
            bool integral = true;
            for (const auto& b : *beta) integral = integral && b.get_den() == 1;
            if (!integral) continue;
          }
          std::vector<Summand> out;
          for (int i = 0; i < m; ++i) {
            if (i == victim) continue;
            Summand t = s[i];
            auto pos = std::find(others.begin(), others.end(), i);
            if (pos != others.end()) {
              const mpq_class& b = (*beta)[static_cast<std::size_t>(pos - others.begin())];
              if (b != 0) t[folded] = (t[folded] + b * s[victim][folded]).normalized(ring);
            }
            out.push_back(std::move(t));
          }
          return MergeResult{Scheme(ring, s.n(), std::move(out)), victim, shared, dependent, folded};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace mmwb::fam
