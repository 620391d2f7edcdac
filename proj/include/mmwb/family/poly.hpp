#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mmwb::fam {

/// Exponent vector with trailing zeros trimmed; entry i is the power of x_{i+1}.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// Graded lexicographic order: total degree first, then lexicographic with x1
/// the most significant variable.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with integer coefficients.
class Poly {
 public:
  using Terms = std::map<Exponents, mpz_class, GrlexLess>;

  Poly() = default;
  Poly(long c) { add_term({}, c); }  // NOLINT: integers convert implicitly
  static Poly constant(const mpz_class& c);
  static Poly variable(int index);   // x_index, 1-based

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant value; requires is_constant().
  mpz_class constant_value() const;
  int degree() const;
  /// Largest variable index present (0 for a constant).
  int max_variable() const;
  std::size_t size() const { return terms_.size(); }
  const std::pair<const Exponents, mpz_class>& leading() const { return *terms_.rbegin(); }

  void add_term(const Exponents& e, const mpz_class& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const mpz_class& c);
  Poly operator-() const;
  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator*(const Poly& x, const Poly& y);
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly pow(unsigned k) const;
  /// gcd of the coefficients (0 for the zero polynomial), always ≥ 0.
  mpz_class content() const;
  /// Divides every coefficient by c, which must divide each exactly.
  Poly divided_by(const mpz_class& c) const;

  /// point[i] is the value of x_{i+1}; variables beyond the point are an error.
  mpz_class evaluate(std::span<const mpz_class> point) const;

  /// Canonical text: monomials in descending grlex order, e.g. "x1^2*x3 - 2*x2 + 1".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// q with a = q·b when such a polynomial exists.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Parses the polynomial grammar: integers, x<k> with 1 ≤ k ≤ params, macro
/// names, "+", "-", "*", "^" and parentheses. Macros are expanded recursively.
class PolyParser {
 public:
  PolyParser(int params, std::map<std::string, std::string> macros = {});
  Poly parse(std::string_view text);

 private:
  const Poly& macro(const std::string& name);

  int params_;
  std::map<std::string, std::string> macros_;
  std::map<std::string, Poly> expanded_;
  std::vector<std::string> active_;
};

}  // namespace mmwb::fam
