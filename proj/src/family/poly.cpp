#include "mmwb/family/poly.hpp"

#include "mmwb/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace mmwb::fam {

namespace {

void trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

// a − b when b divides a.
std::optional<Exponents> sub_exponents(const Exponents& a, const Exponents& b) {
  if (b.size() > a.size()) return std::nullopt;
  Exponents r = a;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (r[i] < b[i]) return std::nullopt;
    r[i] -= b[i];
  }
  trim(r);
  return r;
}

}  // namespace

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    const int x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    if (x != y) return x < y;
  }
  return false;
}

Poly Poly::constant(const mpz_class& c) {
  Poly p;
  p.add_term({}, c);
  return p;
}

Poly Poly::variable(int index) {
  if (index < 1) throw FormatError("parameter indices start at 1");
  Exponents e(static_cast<std::size_t>(index), 0);
  e.back() = 1;
  Poly p;
  p.add_term(e, 1);
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

mpz_class Poly::constant_value() const { return terms_.empty() ? mpz_class(0) : terms_.begin()->second; }

int Poly::degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

int Poly::max_variable() const {
  std::size_t v = 0;
  for (const auto& [e, c] : terms_) v = std::max(v, e.size());
  return static_cast<int>(v);
}

void Poly::add_term(const Exponents& e, const mpz_class& c) {
  if (c == 0) return;
  Exponents key = e;
  trim(key);
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const mpz_class& c) {
  if (c == 0) terms_.clear();
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  p *= -1;
  return p;
}

Poly operator*(const Poly& x, const Poly& y) {
  Poly out;
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) out.add_term(add_exponents(ex, ey), cx * cy);
  return out;
}

Poly Poly::pow(unsigned k) const {
  Poly result(1), base = *this;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& [e, c] : terms_) g = gcd(g, c);
  return g;
}

Poly Poly::divided_by(const mpz_class& c) const {
  Poly p;
  for (const auto& [e, v] : terms_) {
    if (!mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t())) throw FormatError("inexact coefficient division");
    p.terms_.emplace(e, v / c);
  }
  return p;
}

mpz_class Poly::evaluate(std::span<const mpz_class> point) const {
  mpz_class sum = 0;
  for (const auto& [e, c] : terms_) {
    if (e.size() > point.size()) throw FormatError("point has too few coordinates");
    mpz_class t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), point[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
      t *= p;
    }
    sum += t;
  }
  return sum;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const mpz_class a = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out += a.get_str();
    else if (a == 1) out += mono;
    else out += a.get_str() + "*" + mono;
  }
  return out;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  const auto& [lb, lc] = b.leading();
  Poly rem = a, q;
  while (!rem.is_zero()) {
    const auto& [le, c] = rem.leading();
    auto shift = sub_exponents(le, lb);
    if (!shift || !mpz_divisible_p(c.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    Poly t;
    t.add_term(*shift, c / lc);
    q += t;
    rem -= t * b;
  }
  return q;
}

// ---------------------------------------------------------------------------

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char get() {
    const char c = peek();
    if (c) ++pos_;
    return c;
  }
  std::string ident() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  std::string number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("polynomial '" + std::string(s_) + "': " + what);
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyParser::PolyParser(int params, std::map<std::string, std::string> macros)
    : params_(params), macros_(std::move(macros)) {}

const Poly& PolyParser::macro(const std::string& name) {
  if (auto it = expanded_.find(name); it != expanded_.end()) return it->second;
  auto def = macros_.find(name);
  if (def == macros_.end()) throw FormatError("unknown symbol '" + name + "'");
  if (std::find(active_.begin(), active_.end(), name) != active_.end()) {
    throw FormatError("macro '" + name + "' is defined in terms of itself");
  }
  active_.push_back(name);
  Poly p = parse(def->second);
  active_.pop_back();
  return expanded_.emplace(name, std::move(p)).first->second;
}

Poly PolyParser::parse(std::string_view text) {
  Lexer lx(text);
  // expr := ['-'|'+'] term (('+'|'-') term)* ; term := factor ('*' factor)* ;
  // factor := atom ['^' number] ; atom := number | symbol | '(' expr ')'.
  auto expr = [&](auto&& self) -> Poly {
    auto atom = [&]() -> Poly {
      const char c = lx.peek();
      if (c == '(') {
        lx.get();
        Poly p = self(self);
        if (lx.get() != ')') lx.fail("expected ')'");
        return p;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(mpz_class(lx.number()));
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::string id = lx.ident();
        if (macros_.count(id)) return macro(id);
        if (id.size() > 1 && id[0] == 'x' &&
            std::all_of(id.begin() + 1, id.end(), [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
          const int k = std::stoi(id.substr(1));
          if (k < 1 || k > params_) lx.fail("parameter " + id + " out of range");
          return Poly::variable(k);
        }
        lx.fail("unknown symbol '" + id + "'");
      }
      lx.fail(c ? std::string("unexpected '") + c + "'" : "unexpected end");
    };
    auto factor = [&]() -> Poly {
      Poly p = atom();
      if (lx.peek() == '^') {
        lx.get();
        const std::string e = lx.number();
        if (e.empty()) lx.fail("expected exponent");
        p = p.pow(static_cast<unsigned>(std::stoul(e)));
      }
      return p;
    };
    auto term = [&]() -> Poly {
      Poly p = factor();
      while (lx.peek() == '*') {
        lx.get();
        p = p * factor();
      }
      return p;
    };
    Poly p;
    bool negate = false;
    if (lx.peek() == '-' || lx.peek() == '+') negate = lx.get() == '-';
    p = term();
    if (negate) p = -p;
    while (lx.peek() == '+' || lx.peek() == '-') {
      const bool minus = lx.get() == '-';
      Poly t = term();
      if (minus) p -= t;
      else p += t;
    }
    return p;
  };
  Poly p = expr(expr);
  if (lx.peek() != '\0') lx.fail("trailing input");
  return p;
}

}  // namespace mmwb::fam
