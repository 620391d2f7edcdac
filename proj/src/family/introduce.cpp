#include "mmwb/family/introduce.hpp"

#include <stdexcept>

namespace mmwb::fam {

int parse_factor(std::string_view tag) {
  if (tag == "alpha" || tag == "a") return 0;
  if (tag == "beta" || tag == "b") return 1;
  if (tag == "gamma" || tag == "c") return 2;
  throw FormatError("unknown factor '" + std::string(tag) + "' (use alpha, beta or gamma)");
}

std::string_view factor_name(int f) {
  static constexpr std::string_view names[3] = {"alpha", "beta", "gamma"};
  return names[f];
}

SweepOrder parse_sweep_order(std::string_view name) {
  if (name == "forward") return SweepOrder::Forward;
  if (name == "backward") return SweepOrder::Backward;
  if (name == "transposed" || name == "transposed-loops") return SweepOrder::TransposedLoops;
  throw FormatError("unknown sweep order '" + std::string(name) + "'");
}

IntroduceSystem build_introduce_system(const ParamScheme& f, int iota, int u, int v) {
  const int n = f.n(), nn = n * n, m = f.m();
  if (iota < 0 || iota >= m) throw FormatError("summand index out of range");
  if (u < 0 || u > 2 || v < 0 || v > 2 || u == v) throw FormatError("u and v must be distinct factors");
  IntroduceSystem sys;
  for (int s = 0; s < m; ++s)
    for (int k = 0; k < nn; ++k) sys.unknowns.push_back({s, s == iota ? u : v, k / n, k % n});
  for (int idx = 0; idx < brent_count(n); ++idx) {
    const BrentIndex b = BrentIndex::from_linear(n, idx);
    const std::array<std::pair<int, int>, 3> at{{{b.i1, b.i2}, {b.j1, b.j2}, {b.k1, b.k2}}};
    SparseRow row;
    for (int s = 0; s < m; ++s) {
      const int free = s == iota ? u : v;
      Poly coeff(1);
      for (int g = 0; g < 3 && !coeff.is_zero(); ++g) {
        if (g == free) continue;
        const Poly& e = f.entry(s, g, at[g].first, at[g].second);
        coeff = e.is_zero() ? Poly() : coeff * e;
      }
      if (coeff.is_zero()) continue;
      const int col = s * nn + at[free].first * n + at[free].second;
      auto [it, inserted] = row.try_emplace(col, coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) row.erase(it);
      }
    }
    sys.rows.push_back(std::move(row));
    sys.rhs.push_back(b.rhs());
  }
  return sys;
}

IntroduceResult introduce_parameters(const ParamScheme& f, int iota, int u, int v,
                                     const EliminationLimits& limits) {
  IntroduceResult res;
  if (!verify_family_exact(f).correct) throw FormatError("family does not verify; cannot introduce parameters");
  IntroduceSystem sys = build_introduce_system(f, iota, u, v);
  const int cols = static_cast<int>(sys.unknowns.size());
  NullspaceResult ns = nullspace(sys.rows, cols, limits);
  if (!ns.ok) {
    res.diagnostic = "round (" + std::to_string(iota + 1) + ", " + std::string(factor_name(u)) + ", " +
                     std::string(factor_name(v)) + ") rejected: " + ns.diagnostic;
    return res;
  }
  const int k = f.params();
  std::vector<PolySummand> summands = f.summands();
  for (std::size_t t = 0; t < ns.basis.size(); ++t) {
    const Poly x = Poly::variable(k + 1 + static_cast<int>(t));
    for (int j = 0; j < cols; ++j) {
      const Poly& coeff = ns.basis[t][j];
      if (coeff.is_zero()) continue;
      const Unknown& un = sys.unknowns[j];
      summands[un.summand][un.factor][un.row * f.n() + un.col] += coeff * x;
    }
  }
  ParamScheme out(f.n(), k + static_cast<int>(ns.basis.size()), std::move(summands));
  if (!verify_family_exact(out).correct) throw std::logic_error("introduced family fails exact verification");
  res.added = static_cast<int>(ns.basis.size());
  res.family = std::move(out);
  return res;
}

SweepResult introduce_parameters_sweep(const ParamScheme& f, SweepOrder order,
                                       const EliminationLimits& limits) {
  SweepResult res{f, {}, {}};
  const int m = f.m();
  std::vector<int> summands;
  for (int i = 0; i < m; ++i) summands.push_back(order == SweepOrder::Backward ? m - 1 - i : i);

  auto attempt = [&](int iota, int u, int v) {
    IntroduceResult r = introduce_parameters(res.family, iota, u, v, limits);
    if (!r.family) {
      res.rejections.push_back(r.diagnostic);
      return false;
    }
    if (r.added == 0) return false;
    res.family = std::move(*r.family);
    res.rounds.push_back({iota, u, v, r.added});
    return true;
  };

  if (order == SweepOrder::TransposedLoops) {
    std::vector<bool> done(static_cast<std::size_t>(m), false);
    for (const auto& [u, v] : kFactorPairs)
      for (int iota : summands)
        if (!done[iota] && attempt(iota, u, v)) done[iota] = true;
  } else {
    for (int iota : summands)
      for (const auto& [u, v] : kFactorPairs)
        if (attempt(iota, u, v)) break;
  }
  return res;
}

}  // namespace mmwb::fam
