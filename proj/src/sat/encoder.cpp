#include "mmwb/sat/encoder.hpp"

#include "mmwb/rng.hpp"

#include <cassert>
#include <cmath>

namespace mmwb::sat {

namespace {

int fresh_aux(CnfFormula& f, VarMap& vm, int equation, int& counter) {
  const int v = vm.add_aux(equation, counter++);
  [[maybe_unused]] const int fv = f.new_var();
  assert(v == fv);
  return v;
}

void check_fraction(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw FormatError(std::string(what) + " must lie in [0, 1]");
  }
}

std::size_t rounded_count(double fraction, std::size_t total) {
  return static_cast<std::size_t>(std::llround(fraction * static_cast<double>(total)));
}

}  // namespace

std::vector<Clause> even_chunk(const std::vector<int>& lits) {
  const int k = static_cast<int>(lits.size());
  std::vector<Clause> out;
  for (unsigned mask = 0; mask < (1U << k); ++mask) {
    if (__builtin_popcount(mask) % 2 == 0) continue;
    Clause c;
    for (int i = 0; i < k; ++i) c.push_back((mask >> i) & 1U ? -lits[i] : lits[i]);
    out.push_back(std::move(c));
  }
  return out;
}

void encode_even(CnfFormula& f, VarMap& vm, std::vector<AuxDefinition>& aux,
                 std::vector<int> lits, int equation, int& counter) {
  // Queue of pending literals: each full chunk consumes three and appends
  // one fresh variable holding their parity.
  std::size_t head = 0;
  while (lits.size() - head > 4) {
    const int y = fresh_aux(f, vm, equation, counter);
    std::vector<int> chunk{lits[head], lits[head + 1], lits[head + 2], y};
    aux.push_back({y, AuxDefinition::Kind::Parity3, {lits[head], lits[head + 1], lits[head + 2], 0}});
    head += 3;
    for (auto& c : even_chunk(chunk)) f.add(std::move(c));
    lits.push_back(y);
  }
  std::vector<int> last(lits.begin() + static_cast<long>(head), lits.end());
  for (auto& c : even_chunk(last)) f.add(std::move(c));
}

void encode_not_exactly_one(CnfFormula& f, const std::vector<int>& lits) {
  for (std::size_t i = 0; i < lits.size(); ++i) {
    Clause c{-lits[i]};
    for (std::size_t j = 0; j < lits.size(); ++j)
      if (j != i) c.push_back(lits[j]);
    f.add(std::move(c));
  }
}

void encode_at_most_two(CnfFormula& f, VarMap& vm, std::vector<AuxDefinition>& aux,
                        std::vector<int> lits, int equation, int& counter) {
  while (true) {
    const int p = static_cast<int>(lits.size());
    const int direct = p < 4 ? p : 4;
    for (int a = 0; a < direct; ++a)
      for (int b = a + 1; b < direct; ++b)
        for (int c = b + 1; c < direct; ++c) f.add({-lits[a], -lits[b], -lits[c]});
    if (p <= 4) return;
    const int x1 = lits[0], x2 = lits[1], x3 = lits[2], x4 = lits[3];
    const int y = fresh_aux(f, vm, equation, counter);
    const int z = fresh_aux(f, vm, equation, counter);
    aux.push_back({y, AuxDefinition::Kind::AtMostTwoY, {x1, x2, x3, x4}});
    aux.push_back({z, AuxDefinition::Kind::AtMostTwoZ, {x1, x2, x3, x4}});
    f.add({-x1, y});
    f.add({-x2, y});
    f.add({-x1, -x2, z});
    f.add({-x3, z});
    f.add({-x4, z});
    f.add({-x3, -x4, y});
    std::vector<int> rest{y, z};
    rest.insert(rest.end(), lits.begin() + 4, lits.end());
    lits = std::move(rest);
  }
}

void validate_diag_distribution(int n, int m, const std::vector<int>& dist) {
  const int terms = n * n * n;
  if (static_cast<int>(dist.size()) != terms) {
    throw FormatError("diagonal distribution must assign all " + std::to_string(terms) + " terms");
  }
  std::vector<int> load(static_cast<std::size_t>(m));
  for (int s : dist) {
    if (s < 0 || s >= m) throw FormatError("diagonal distribution names an unknown summand");
    ++load[s];
  }
  for (int l : load) {
    if (l < 1 || l > 2) {
      throw FormatError("diagonal distribution must give each summand one or two terms");
    }
  }
}

std::vector<int> random_diag_distribution(int n, int m, std::uint64_t seed) {
  const int terms = n * n * n;
  if (m > terms || terms > 2 * m) {
    throw FormatError("no diagonal distribution with one or two terms per summand for m=" +
                      std::to_string(m));
  }
  Rng rng(seed);
  std::vector<int> slots;
  for (int s = 0; s < m; ++s) slots.push_back(s);
  for (std::size_t s : rng.sample(static_cast<std::size_t>(m), static_cast<std::size_t>(terms - m)))
    slots.push_back(static_cast<int>(s));
  rng.shuffle(slots);
  return slots;
}

std::vector<Clause> apply_streamline(const StreamlinePlan& plan, const VarMap& vm) {
  const int n = vm.n(), m = vm.m(), nn = n * n;
  Rng rng(plan.seed);
  std::vector<Clause> units;

  if (plan.fixes) {
    const Scheme& known = plan.fixes->known;
    if (known.ring() != Ring::Z2 || known.n() != n || known.m() != m) {
      throw FormatError("known scheme for fixes must be a Z2 scheme of matching shape");
    }
    check_fraction(plan.fixes->fraction, "fix fraction");
    const auto total = static_cast<std::size_t>(vm.base_count());
    for (std::size_t idx : rng.sample(total, rounded_count(plan.fixes->fraction, total))) {
      const int var = static_cast<int>(idx) + 1;
      const Role& r = vm.role(var);
      const bool one = known[r.indices[0]][static_cast<int>(r.kind)](r.indices[1], r.indices[2]) != 0;
      units.push_back({one ? var : -var});
    }
  }

  if (plan.offdiag_zero_fraction) {
    check_fraction(*plan.offdiag_zero_fraction, "off-diagonal fraction");
    std::vector<int> candidates;
    for (int iota = 0; iota < m; ++iota)
      for (int idx = 0; idx < nn * nn * nn; ++idx) {
        const BrentIndex b = BrentIndex::from_linear(n, idx);
        if (b.i2 != b.j1 && b.j2 != b.k1 && b.k2 != b.i1) candidates.push_back(vm.t_var(iota, idx));
      }
    for (std::size_t k : rng.sample(candidates.size(),
                                    rounded_count(*plan.offdiag_zero_fraction, candidates.size())))
      units.push_back({-candidates[k]});
  }

  if (plan.diag_distribution) {
    const auto& dist = *plan.diag_distribution;
    validate_diag_distribution(n, m, dist);
    for (int iota = 0; iota < m; ++iota)
      for (int term = 0; term < n * n * n; ++term) {
        const int i1 = term / nn, j1 = (term / n) % n, k1 = term % n;
        const BrentIndex b{i1, j1, j1, k1, k1, i1};
        const int var = vm.t_var(iota, b.linear(n));
        units.push_back({dist[term] == iota ? var : -var});
      }
  }
  return units;
}

Encoding encode_brent(int n, int m, const StreamlinePlan& plan) {
  check_dimension(n);
  if (m < 1) throw FormatError("summand count must be positive");
  const int nn = n * n;
  Encoding enc{CnfFormula(3 * nn * m + m * nn * nn + m * nn * nn * nn), VarMap(n, m), {}, 0, 0};
  auto& f = enc.formula;
  auto& vm = enc.varmap;

  // s ↔ α ∧ β and t ↔ s ∧ γ, three clauses each.
  for (int iota = 0; iota < m; ++iota)
    for (int p = 0; p < nn; ++p)
      for (int q = 0; q < nn; ++q) {
        const int s = vm.s_var(iota, p / n, p % n, q / n, q % n);
        const int a = vm.factor_var(0, iota, p / n, p % n);
        const int b = vm.factor_var(1, iota, q / n, q % n);
        f.add({-s, a});
        f.add({-s, b});
        f.add({s, -a, -b});
      }
  for (int iota = 0; iota < m; ++iota)
    for (int idx = 0; idx < nn * nn * nn; ++idx) {
      const BrentIndex bi = BrentIndex::from_linear(n, idx);
      const int t = vm.t_var(iota, idx);
      const int s = vm.s_var(iota, bi.i1, bi.i2, bi.j1, bi.j2);
      const int g = vm.factor_var(2, iota, bi.k1, bi.k2);
      f.add({-t, s});
      f.add({-t, g});
      f.add({t, -s, -g});
    }

  for (int idx = 0; idx < nn * nn * nn; ++idx) {
    const BrentIndex bi = BrentIndex::from_linear(n, idx);
    std::vector<int> lits;
    for (int iota = 0; iota < m; ++iota) lits.push_back(vm.t_var(iota, idx));
    int counter = 0;
    if (bi.rhs() == 0 && plan.mode == EncodingMode::ZeroOrTwo) {
      encode_not_exactly_one(f, lits);
      encode_at_most_two(f, vm, enc.aux, lits, idx, counter);
    } else {
      if (bi.rhs() == 1) lits[0] = -lits[0];
      encode_even(f, vm, enc.aux, lits, idx, counter);
    }
    ++enc.equations;
  }

  for (auto& u : apply_streamline(plan, vm)) {
    f.add(std::move(u));
    ++enc.unit_clauses;
  }
  return enc;
}

}  // namespace mmwb::sat
