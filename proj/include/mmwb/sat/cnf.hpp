#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mmwb::sat {

using Clause = std::vector<int>;

/// Clause list over variables 1..num_vars in DIMACS literal convention.
class CnfFormula {
 public:
  CnfFormula() = default;
  explicit CnfFormula(int num_vars) : num_vars_(num_vars) {}

  int num_vars() const { return num_vars_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }

  int new_var() { return ++num_vars_; }
  /// Rejects empty clauses, out-of-range literals and tautologies.
  void add(Clause c);

  void write_dimacs(std::ostream& out) const;
  std::string to_dimacs() const;
  static CnfFormula parse_dimacs(std::string_view text);

 private:
  int num_vars_ = 0;
  std::vector<Clause> clauses_;
};

enum class RoleKind { Alpha, Beta, Gamma, S, T, Aux };

std::string_view role_tag(RoleKind k);

/// Semantic role of a DIMACS variable. Indices are zero-based here and
/// one-based in the JSON sidecar.
struct Role {
  RoleKind kind;
  std::vector<int> indices;
  friend bool operator==(const Role&, const Role&) = default;
  friend auto operator<=>(const Role&, const Role&) = default;
};

/// Bijection between variables and roles for a Brent encoding with n×n
/// matrices and m summands. Variables 1..3n²m are α, β, γ (in that block
/// order, summand-major, row-major), followed by s, t and auxiliaries.
class VarMap {
 public:
  VarMap(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  int size() const { return static_cast<int>(roles_.size()); }
  int base_count() const { return 3 * n_ * n_ * m_; }

  /// factor: 0 α, 1 β, 2 γ.
  int factor_var(int factor, int iota, int r, int c) const;
  int s_var(int iota, int i1, int i2, int j1, int j2) const;
  int t_var(int iota, int linear_brent) const;

  const Role& role(int var) const { return roles_.at(var - 1); }
  int add_aux(int equation, int counter);
  int find(const Role& r) const;

  nlohmann::json to_json() const;
  static VarMap from_json(const nlohmann::json& j);

 private:
  int n_, m_;
  std::vector<Role> roles_;
  std::map<std::pair<int, int>, int> aux_;
};

}  // namespace mmwb::sat
