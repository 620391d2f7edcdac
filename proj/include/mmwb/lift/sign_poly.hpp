#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace mmwb::lift {

/// Sorted, repetition-free list of variable ids: x² = 1 on {−1, +1}.
using Monomial = std::vector<int>;

/// Product of two monomials with squares cancelled.
Monomial mul(const Monomial& a, const Monomial& b);

/// Multilinear polynomial with int64 coefficients; arithmetic throws
/// std::overflow_error instead of wrapping.
class SignPoly {
 public:
  SignPoly() = default;
  static SignPoly constant(std::int64_t c);
  static SignPoly variable(int id, std::int64_t c = 1);

  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int degree() const;
  std::int64_t constant_term() const;
  std::int64_t coefficient(const Monomial& m) const;
  bool contains(int var) const;

  void add_term(const Monomial& m, std::int64_t c);
  SignPoly& operator+=(const SignPoly& o);
  SignPoly& operator-=(const SignPoly& o);
  SignPoly& operator*=(std::int64_t c);
  friend SignPoly operator*(const SignPoly& x, const SignPoly& y);
  friend SignPoly operator+(SignPoly x, const SignPoly& y) { return x += y; }
  friend SignPoly operator-(SignPoly x, const SignPoly& y) { return x -= y; }

  /// (F, G) with this = x·F + G and neither containing x.
  std::pair<SignPoly, SignPoly> split(int var) const;

  /// Values indexed by id, each ±1.
  std::int64_t evaluate(std::span<const int> values) const;

  std::string to_string() const;

  friend bool operator==(const SignPoly&, const SignPoly&) = default;
  friend bool operator<(const SignPoly& x, const SignPoly& y) { return x.terms_ < y.terms_; }

 private:
  std::map<Monomial, std::int64_t> terms_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace mmwb::lift
