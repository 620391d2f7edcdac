#include "mmwb/sat/model.hpp"

#include <cstdlib>
#include <sstream>

namespace mmwb::sat {

std::vector<int> parse_model(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<int> lits;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    const char head = line[start];
    if (head == 'c' || head == 's') continue;
    if (head == 'v') ++start;
    std::istringstream ls(line.substr(start));
    std::string tok;
    while (ls >> tok) {
      char* end = nullptr;
      const long v = std::strtol(tok.c_str(), &end, 10);
      if (end == tok.c_str() || *end != '\0') throw FormatError("bad model token '" + tok + "'");
      if (v == 0) return lits;
      lits.push_back(static_cast<int>(v));
    }
  }
  return lits;
}

Scheme decode_model(const std::vector<int>& model, const VarMap& vm) {
  const int base = vm.base_count();
  std::vector<int> value(static_cast<std::size_t>(base), -1);
  for (int lit : model) {
    const int v = std::abs(lit);
    if (v >= 1 && v <= base) value[v - 1] = lit > 0;
  }
  const int n = vm.n();
  std::vector<Summand> summands(static_cast<std::size_t>(vm.m()),
                                Summand{Mat(n), Mat(n), Mat(n)});
  for (int v = 1; v <= base; ++v) {
    if (value[v - 1] < 0) {
      throw FormatError("model does not assign variable " + std::to_string(v));
    }
    const Role& r = vm.role(v);
    summands[r.indices[0]][static_cast<int>(r.kind)](r.indices[1], r.indices[2]) = value[v - 1];
  }
  return Scheme(Ring::Z2, n, std::move(summands));
}

bool check_assignment(const CnfFormula& f, const Assignment& a) {
  if (static_cast<int>(a.size()) < f.num_vars()) {
    throw FormatError("assignment covers " + std::to_string(a.size()) + " of " +
                      std::to_string(f.num_vars()) + " variables");
  }
  for (const auto& c : f.clauses()) {
    bool sat = false;
    for (int lit : c) {
      if (a[std::abs(lit) - 1] == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

Assignment extend_assignment(const Scheme& s, const Encoding& enc) {
  const VarMap& vm = enc.varmap;
  if (s.ring() != Ring::Z2 || s.n() != vm.n() || s.m() != vm.m()) {
    throw FormatError("scheme does not match the encoding's shape");
  }
  const int n = vm.n(), nn = n * n;
  Assignment a(static_cast<std::size_t>(enc.formula.num_vars()), false);
  auto set = [&](int var, bool v) { a[var - 1] = v; };
  auto lit = [&](int l) { return a[std::abs(l) - 1] == (l > 0); };
  for (int iota = 0; iota < vm.m(); ++iota)
    for (int f = 0; f < 3; ++f)
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) set(vm.factor_var(f, iota, r, c), s[iota][f](r, c) != 0);
  for (int iota = 0; iota < vm.m(); ++iota) {
    for (int p = 0; p < nn; ++p)
      for (int q = 0; q < nn; ++q)
        set(vm.s_var(iota, p / n, p % n, q / n, q % n),
            s[iota].a.entries()[p] != 0 && s[iota].b.entries()[q] != 0);
    for (int idx = 0; idx < nn * nn * nn; ++idx) {
      const BrentIndex b = BrentIndex::from_linear(n, idx);
      set(vm.t_var(iota, idx), s[iota].a(b.i1, b.i2) != 0 && s[iota].b(b.j1, b.j2) != 0 &&
                                   s[iota].c(b.k1, b.k2) != 0);
    }
  }
  for (const auto& d : enc.aux) {
    const bool x1 = lit(d.lits[0]), x2 = lit(d.lits[1]), x3 = lit(d.lits[2]);
    switch (d.kind) {
      case AuxDefinition::Kind::Parity3: set(d.var, x1 ^ x2 ^ x3); break;
      case AuxDefinition::Kind::AtMostTwoY: set(d.var, x1 || x2 || (x3 && lit(d.lits[3]))); break;
      case AuxDefinition::Kind::AtMostTwoZ: set(d.var, (x1 && x2) || x3 || lit(d.lits[3])); break;
    }
  }
  return a;
}

std::vector<int> to_model(const Assignment& a) {
  std::vector<int> m;
  m.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int v = static_cast<int>(i) + 1;
    m.push_back(a[i] ? v : -v);
  }
  return m;
}

}  // namespace mmwb::sat
