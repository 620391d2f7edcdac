#include "mmwb/lift/sign_system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mmwb::lift {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? checked_mul(v, -1) : v; }

enum class Verdict { Keep, Drop, Unsat };

// Canonical form of a single equation; may return a replacement.
Verdict normalize_equation(SignPoly& p) {
  if (p.is_zero()) return Verdict::Drop;
  if (p.size() == 1) return Verdict::Unsat;

  // Cancel variables common to every monomial.
  Monomial common = p.terms().begin()->first;
  for (const auto& [m, c] : p.terms()) {
    Monomial keep;
    std::set_intersection(common.begin(), common.end(), m.begin(), m.end(), std::back_inserter(keep));
    common = std::move(keep);
  }
  if (!common.empty()) {
    SignPoly q;
    for (const auto& [m, c] : p.terms()) q.add_term(mul(m, common), c);
    p = std::move(q);
  }

  std::int64_t g = 0, total = 0, largest = 0;
  for (const auto& [m, c] : p.terms()) {
    g = std::gcd(g, abs64(c));
    total = checked_add(total, abs64(c));
    largest = std::max(largest, abs64(c));
  }
  // On ±1 values a monomial is odd, so Σ c·M ≡ Σ c (mod 2); and one term
  // cannot outweigh all the others.
  if (total % 2 != 0 || 2 * largest > total) return Verdict::Unsat;

  if (p.size() == 2) {
    const auto& [m1, a] = *p.terms().begin();
    const auto& [m2, b] = *std::next(p.terms().begin());
    if (abs64(a) != abs64(b)) return Verdict::Unsat;
    // a·M1 + b·M2 = 0  ⇔  M1·M2 = −b/a.
    const std::int64_t sigma = (a == b) ? -1 : 1;
    const Monomial prod = mul(m1, m2);
    SignPoly q;
    if (prod.size() == 2) {
      q.add_term({prod[0]}, 1);
      q.add_term({prod[1]}, -sigma);
    } else {
      q.add_term(prod, 1);
      q.add_term({}, -sigma);
    }
    p = std::move(q);
    return Verdict::Keep;
  }

  if (g > 1) {
    SignPoly q;
    for (const auto& [m, c] : p.terms()) q.add_term(m, c / g);
    p = std::move(q);
  }
  if (p.terms().rbegin()->second < 0) p *= -1;
  return Verdict::Keep;
}

SignPoly substitute(const SignPoly& p, int var, std::int64_t coeff, const SignPoly& rest) {
  // p = x·F + G and c·x = −rest  ⇒  c·p = −rest·F + c·G (c ≠ 0).
  auto [f, g] = p.split(var);
  if (f.is_zero()) return p;
  SignPoly out = rest * f;
  out *= -1;
  g *= coeff;
  out += g;
  return out;
}

}  // namespace

int SignSystem::active_vars() const {
  std::vector<bool> seen(static_cast<std::size_t>(num_vars));
  for (const auto& e : equations)
    for (const auto& [m, c] : e.terms())
      for (int v : m) seen[static_cast<std::size_t>(v)] = true;
  return static_cast<int>(std::count(seen.begin(), seen.end(), true));
}

SignSystem build_sign_system(const Scheme& s) {
  if (s.ring() != Ring::Z2) throw FormatError("sign lifting starts from a Z2 scheme");
  if (!verify(s).correct) throw FormatError("scheme does not verify over Z2");
  const int n = s.n(), m = s.m(), nn = n * n;
  SignSystem sys;
  // term[ι][f][r*n+c]: −1 for a zero entry, −2 for a normalized +1, else the id.
  std::vector<std::array<std::vector<int>, 3>> term(static_cast<std::size_t>(m));
  for (int iota = 0; iota < m; ++iota)
    for (int f = 0; f < 3; ++f) {
      auto& slot = term[iota][f];
      slot.assign(static_cast<std::size_t>(nn), -1);
      bool first = f < 2;
      for (int k = 0; k < nn; ++k) {
        if (s[iota][f].entries()[k] == 0) continue;
        const Position pos{f, iota, k / n, k % n};
        if (first) {
          slot[k] = -2;
          sys.normalized.push_back(pos);
          first = false;
        } else {
          slot[k] = sys.num_vars++;
          sys.variables.push_back(pos);
        }
      }
    }
  for (int idx = 0; idx < brent_count(n); ++idx) {
    const BrentIndex b = BrentIndex::from_linear(n, idx);
    SignPoly eq;
    int count = 0;
    for (int iota = 0; iota < m; ++iota) {
      const int va = term[iota][0][b.i1 * n + b.i2];
      const int vb = term[iota][1][b.j1 * n + b.j2];
      const int vc = term[iota][2][b.k1 * n + b.k2];
      if (va == -1 || vb == -1 || vc == -1) continue;
      Monomial mono;
      for (int v : {va, vb, vc})
        if (v >= 0) mono.push_back(v);
      std::sort(mono.begin(), mono.end());
      eq.add_term(mono, 1);
      ++count;
    }
    if (count % 2 != b.rhs()) throw std::logic_error("sign system parity mismatch");
    eq.add_term({}, -b.rhs());
    if (!eq.is_zero()) sys.equations.insert(std::move(eq));
  }
  return sys;
}

SignSystem simplify_sign_system(SignSystem sys) {
  if (sys.unsat) return sys;
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<SignPoly> next;
    for (SignPoly p : sys.equations) {
      const SignPoly before = p;
      switch (normalize_equation(p)) {
        case Verdict::Unsat:
          sys.unsat = true;
          sys.equations.clear();
          return sys;
        case Verdict::Drop:
          changed = true;
          break;
        case Verdict::Keep:
          if (!(p == before)) changed = true;
          next.insert(std::move(p));
          break;
      }
    }
    sys.equations = std::move(next);
  }
  return sys;
}

namespace {

void substitute_all(SignSystem& sys, int var, std::int64_t coeff, const SignPoly& rest) {
  std::set<SignPoly> next;
  for (const auto& e : sys.equations) next.insert(substitute(e, var, coeff, rest));
  SignPoly domain = rest * rest;
  domain.add_term({}, -checked_mul(coeff, coeff));
  next.insert(std::move(domain));
  sys.equations = std::move(next);
  sys.substitutions.push_back({var, coeff, rest});
}

}  // namespace

SignSystem eliminate_linear(SignSystem sys) {
  sys = simplify_sign_system(std::move(sys));
  while (!sys.unsat) {
    const SignPoly* best = nullptr;
    int best_var = -1;
    std::int64_t best_coeff = 0;
    for (const auto& e : sys.equations) {
      if (e.degree() != 1) continue;
      for (const auto& [m, c] : e.terms()) {
        if (m.size() != 1) continue;
        const bool unit = abs64(c) == 1;
        const bool best_unit = abs64(best_coeff) == 1;
        if (!best || (unit && !best_unit) || (unit == best_unit && m[0] < best_var)) {
          best = &e;
          best_var = m[0];
          best_coeff = c;
        }
      }
    }
    if (!best) break;
    SignPoly rest = *best;
    rest.add_term({best_var}, -best_coeff);
    substitute_all(sys, best_var, best_coeff, rest);
    sys = simplify_sign_system(std::move(sys));
  }
  return sys;
}

std::vector<int> extend_solution(const SignSystem& sys, std::vector<int> values) {
  values.resize(static_cast<std::size_t>(sys.num_vars), 0);
  for (auto& v : values)
    if (v == 0) v = 1;
  for (auto it = sys.substitutions.rbegin(); it != sys.substitutions.rend(); ++it) {
    const std::int64_t r = it->rest.evaluate(values);
    if (r % it->coeff != 0) throw std::logic_error("substitution does not divide exactly");
    const std::int64_t x = -r / it->coeff;
    if (x != 1 && x != -1) throw std::logic_error("substitution leaves the sign domain");
    values[static_cast<std::size_t>(it->var)] = static_cast<int>(x);
  }
  return values;
}

bool satisfies(const SignSystem& sys, const std::vector<int>& values) {
  if (sys.unsat) return false;
  for (const auto& e : sys.equations)
    if (e.evaluate(values) != 0) return false;
  return true;
}

Scheme assign_signs(const Scheme& s, const SignSystem& sys, const std::vector<int>& values) {
  std::vector<Summand> out = s.summands();
  for (std::size_t id = 0; id < sys.variables.size(); ++id) {
    const Position& p = sys.variables[id];
    out[p.summand][p.factor](p.row, p.col) = values[id];
  }
  return Scheme(Ring::Int, s.n(), std::move(out));
}

}  // namespace mmwb::lift
