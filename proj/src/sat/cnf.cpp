#include "mmwb/sat/cnf.hpp"

#include "mmwb/ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace mmwb::sat {

void CnfFormula::add(Clause c) {
  if (c.empty()) throw FormatError("empty clause");
  for (int lit : c) {
    if (lit == 0 || std::abs(lit) > num_vars_) {
      throw FormatError("literal " + std::to_string(lit) + " out of range");
    }
    if (std::find(c.begin(), c.end(), -lit) != c.end()) {
      throw FormatError("tautological clause");
    }
  }
  clauses_.push_back(std::move(c));
}

void CnfFormula::write_dimacs(std::ostream& out) const {
  out << "p cnf " << num_vars_ << ' ' << clauses_.size() << '\n';
  std::string line;
  for (const auto& c : clauses_) {
    line.clear();
    for (int lit : c) {
      line += std::to_string(lit);
      line += ' ';
    }
    line += "0\n";
    out << line;
  }
}

std::string CnfFormula::to_dimacs() const {
  std::ostringstream os;
  write_dimacs(os);
  return os.str();
}

CnfFormula CnfFormula::parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  CnfFormula f;
  bool header = false;
  long expected = 0;
  Clause cur;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, cnf;
      ls >> p >> cnf >> f.num_vars_ >> expected;
      if (cnf != "cnf" || !ls) throw FormatError("malformed DIMACS header");
      header = true;
      continue;
    }
    if (!header) throw FormatError("clause before DIMACS header");
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        f.add(std::move(cur));
        cur.clear();
      } else {
        cur.push_back(lit);
      }
    }
  }
  if (!cur.empty()) throw FormatError("unterminated clause");
  if (static_cast<long>(f.clauses_.size()) != expected) {
    throw FormatError("clause count does not match header");
  }
  return f;
}

std::string_view role_tag(RoleKind k) {
  switch (k) {
    case RoleKind::Alpha: return "alpha";
    case RoleKind::Beta: return "beta";
    case RoleKind::Gamma: return "gamma";
    case RoleKind::S: return "s";
    case RoleKind::T: return "t";
    case RoleKind::Aux: return "aux";
  }
  return "?";
}

namespace {

RoleKind parse_role_tag(std::string_view s) {
  for (auto k : {RoleKind::Alpha, RoleKind::Beta, RoleKind::Gamma, RoleKind::S,
                 RoleKind::T, RoleKind::Aux})
    if (role_tag(k) == s) return k;
  throw FormatError("unknown role '" + std::string(s) + "'");
}

}  // namespace

VarMap::VarMap(int n, int m) : n_(n), m_(m) {
  const int nn = n * n;
  for (int f = 0; f < 3; ++f)
    for (int iota = 0; iota < m; ++iota)
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          roles_.push_back({static_cast<RoleKind>(f), {iota, r, c}});
  for (int iota = 0; iota < m; ++iota)
    for (int p = 0; p < nn; ++p)
      for (int q = 0; q < nn; ++q)
        roles_.push_back({RoleKind::S, {iota, p / n, p % n, q / n, q % n}});
  for (int iota = 0; iota < m; ++iota)
    for (int idx = 0; idx < nn * nn * nn; ++idx) {
      std::vector<int> ind{iota};
      int rest = idx;
      std::vector<int> six(6);
      for (int k = 5; k >= 0; --k) {
        six[k] = rest % n;
        rest /= n;
      }
      ind.insert(ind.end(), six.begin(), six.end());
      roles_.push_back({RoleKind::T, std::move(ind)});
    }
}

int VarMap::factor_var(int factor, int iota, int r, int c) const {
  return 1 + (factor * m_ + iota) * n_ * n_ + r * n_ + c;
}

int VarMap::s_var(int iota, int i1, int i2, int j1, int j2) const {
  const int nn = n_ * n_;
  return 1 + base_count() + (iota * nn + i1 * n_ + i2) * nn + j1 * n_ + j2;
}

int VarMap::t_var(int iota, int linear_brent) const {
  const int nn = n_ * n_;
  return 1 + base_count() + m_ * nn * nn + iota * nn * nn * nn + linear_brent;
}

int VarMap::add_aux(int equation, int counter) {
  roles_.push_back({RoleKind::Aux, {equation, counter}});
  const int v = static_cast<int>(roles_.size());
  aux_.emplace(std::make_pair(equation, counter), v);
  return v;
}

int VarMap::find(const Role& r) const {
  const auto& i = r.indices;
  switch (r.kind) {
    case RoleKind::Alpha:
    case RoleKind::Beta:
    case RoleKind::Gamma:
      return factor_var(static_cast<int>(r.kind), i.at(0), i.at(1), i.at(2));
    case RoleKind::S:
      return s_var(i.at(0), i.at(1), i.at(2), i.at(3), i.at(4));
    case RoleKind::T: {
      int lin = 0;
      for (int k = 1; k <= 6; ++k) lin = lin * n_ + i.at(k);
      return t_var(i.at(0), lin);
    }
    case RoleKind::Aux: {
      auto it = aux_.find({i.at(0), i.at(1)});
      return it == aux_.end() ? 0 : it->second;
    }
  }
  return 0;
}

nlohmann::json VarMap::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t v = 0; v < roles_.size(); ++v) {
    nlohmann::json ind = nlohmann::json::array();
    for (int x : roles_[v].indices) ind.push_back(x + 1);
    arr.push_back({{"var", v + 1}, {"role", std::string(role_tag(roles_[v].kind))},
                   {"indices", std::move(ind)}});
  }
  return arr;
}

VarMap VarMap::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw FormatError("varmap must be an array");
  int n = 0, m = 0;
  std::vector<Role> roles(j.size());
  for (const auto& e : j) {
    const int var = e.at("var").get<int>();
    if (var < 1 || var > static_cast<int>(j.size())) throw FormatError("varmap var out of range");
    Role r{parse_role_tag(e.at("role").get<std::string>()), {}};
    for (const auto& x : e.at("indices")) r.indices.push_back(x.get<int>() - 1);
    if (r.kind == RoleKind::Alpha) {
      m = std::max(m, r.indices.at(0) + 1);
      n = std::max({n, r.indices.at(1) + 1, r.indices.at(2) + 1});
    }
    roles[var - 1] = std::move(r);
  }
  if (n == 0 || m == 0) throw FormatError("varmap has no alpha variables");
  VarMap vm(n, m);
  for (int v = 1; v <= vm.size(); ++v) {
    if (!(roles[v - 1] == vm.role(v))) throw FormatError("varmap layout mismatch");
  }
  for (std::size_t v = vm.roles_.size(); v < roles.size(); ++v) {
    if (roles[v].kind != RoleKind::Aux) throw FormatError("unexpected role after t block");
    vm.add_aux(roles[v].indices.at(0), roles[v].indices.at(1));
  }
  return vm;
}

}  // namespace mmwb::sat
