#include "mmwb/ring.hpp"

namespace mmwb {

std::string_view ring_name(Ring r) {
  switch (r) {
    case Ring::Z2: return "z2";
    case Ring::Int: return "int";
    case Ring::Rat: return "rat";
  }
  return "?";
}

Ring parse_ring(std::string_view name) {
  if (name == "z2") return Ring::Z2;
  if (name == "int") return Ring::Int;
  if (name == "rat") return Ring::Rat;
  throw FormatError("unknown ring '" + std::string(name) + "'");
}

bool is_member(Ring r, const mpq_class& v) {
  switch (r) {
    case Ring::Z2: return v.get_den() == 1 && (v == 0 || v == 1);
    case Ring::Int: return v.get_den() == 1;
    case Ring::Rat: return true;
  }
  return false;
}

mpq_class normalize(Ring r, const mpq_class& v) {
  mpq_class out(v);
  out.canonicalize();
  switch (r) {
    case Ring::Z2: {
      if (out.get_den() != 1) throw FormatError("non-integer value in Z2");
      mpz_class m = out.get_num() % 2;
      if (m < 0) m += 2;
      return mpq_class(m);
    }
    case Ring::Int:
      if (out.get_den() != 1) throw FormatError("non-integer value in Int");
      return out;
    case Ring::Rat: return out;
  }
  return out;
}

bool is_unit(Ring r, const mpq_class& v) {
  switch (r) {
    case Ring::Z2: return v == 1;
    case Ring::Int: return v == 1 || v == -1;
    case Ring::Rat: return v != 0;
  }
  return false;
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw FormatError("empty rational");
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    mpz_class z;
    if (part.empty() || z.set_str(part, 10) != 0) {
      throw FormatError("malformed rational '" + s + "'");
    }
    return z;
  };
  if (slash == std::string::npos) return mpq_class(parse_int(s));
  mpz_class num = parse_int(s.substr(0, slash));
  mpz_class den = parse_int(s.substr(slash + 1));
  if (den == 0) throw FormatError("zero denominator in '" + s + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rational(const mpq_class& v) {
  return v.get_str();
}

}  // namespace mmwb
