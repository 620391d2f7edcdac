#include "mmwb/lift/sign_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace mmwb::lift {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("sign polynomial coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("sign polynomial coefficient overflow");
  return r;
}

Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

SignPoly SignPoly::constant(std::int64_t c) {
  SignPoly p;
  p.add_term({}, c);
  return p;
}

SignPoly SignPoly::variable(int id, std::int64_t c) {
  SignPoly p;
  p.add_term({id}, c);
  return p;
}

int SignPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

std::int64_t SignPoly::constant_term() const { return coefficient({}); }

std::int64_t SignPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

bool SignPoly::contains(int var) const {
  for (const auto& [m, c] : terms_)
    if (std::binary_search(m.begin(), m.end(), var)) return true;
  return false;
}

void SignPoly::add_term(const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

SignPoly& SignPoly::operator+=(const SignPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SignPoly& SignPoly::operator-=(const SignPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

SignPoly& SignPoly::operator*=(std::int64_t c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v = checked_mul(v, c);
  return *this;
}

SignPoly operator*(const SignPoly& x, const SignPoly& y) {
  SignPoly out;
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) out.add_term(mul(mx, my), checked_mul(cx, cy));
  return out;
}

std::pair<SignPoly, SignPoly> SignPoly::split(int var) const {
  SignPoly f, g;
  for (const auto& [m, c] : terms_) {
    auto it = std::lower_bound(m.begin(), m.end(), var);
    if (it != m.end() && *it == var) {
      Monomial rest(m.begin(), it);
      rest.insert(rest.end(), it + 1, m.end());
      f.add_term(rest, c);
    } else {
      g.add_term(m, c);
    }
  }
  return {f, g};
}

std::int64_t SignPoly::evaluate(std::span<const int> values) const {
  std::int64_t sum = 0;
  for (const auto& [m, c] : terms_) {
    int sign = 1;
    for (int v : m) sign *= values[static_cast<std::size_t>(v)];
    sum = checked_add(sum, sign > 0 ? c : checked_mul(c, -1));
  }
  return sum;
}

std::string SignPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const std::int64_t a = c < 0 ? -c : c;
    std::string mono;
    for (int v : m) mono += (mono.empty() ? "" : "*") + ("x" + std::to_string(v));
    if (mono.empty()) out += std::to_string(a);
    else out += (a == 1 ? "" : std::to_string(a) + "*") + mono;
  }
  return out;
}

}  // namespace mmwb::lift
