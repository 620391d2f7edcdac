#include "mmwb/scheme_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace mmwb {

using nlohmann::json;

namespace {

mpq_class entry_from_json(const json& v) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return mpq_class(mpz_class(std::to_string(v.get<std::uint64_t>())));
    return mpq_class(mpz_class(std::to_string(v.get<std::int64_t>())));
  }
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw FormatError("matrix entry must be an integer or a \"p/q\" string");
}

json entry_to_json(const mpq_class& v) {
  if (v.get_den() == 1 && v.get_num().fits_slong_p()) return v.get_num().get_si();
  return v.get_str();
}

}  // namespace

Mat mat_from_json(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw FormatError("matrix must have " + std::to_string(n) + " rows");
  }
  Mat m(n);
  for (int r = 0; r < n; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw FormatError("matrix row must have " + std::to_string(n) + " entries");
    }
    for (int c = 0; c < n; ++c) m(r, c) = entry_from_json(row[c]);
  }
  return m;
}

json mat_to_json(const Mat& m, Ring) {
  json rows = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(entry_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Scheme scheme_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("scheme file must be a JSON object");
  if (j.value("format", std::string()) != kSchemeFormat) {
    throw FormatError("expected format \"mmscheme-v1\"");
  }
  if (!j.contains("ring") || !j.contains("n") || !j.contains("summands")) {
    throw FormatError("scheme needs ring, n and summands");
  }
  const Ring ring = parse_ring(j.at("ring").get<std::string>());
  if (!j.at("n").is_number_integer()) throw FormatError("n must be an integer");
  const int n = j.at("n").get<int>();
  check_dimension(n);
  const auto& arr = j.at("summands");
  if (!arr.is_array()) throw FormatError("summands must be an array");
  if (j.contains("m") && j.at("m").get<int>() != static_cast<int>(arr.size())) {
    throw FormatError("m does not match the number of summands");
  }
  std::vector<Summand> summands;
  for (const auto& t : arr) {
    if (!t.is_object() || !t.contains("a") || !t.contains("b") || !t.contains("c")) {
      throw FormatError("summand needs a, b and c");
    }
    summands.push_back({mat_from_json(t.at("a"), n), mat_from_json(t.at("b"), n),
                        mat_from_json(t.at("c"), n)});
  }
  return Scheme(ring, n, std::move(summands));
}

json scheme_to_json(const Scheme& s) {
  json arr = json::array();
  for (const auto& t : s.summands()) {
    arr.push_back({{"a", mat_to_json(t.a, s.ring())},
                   {"b", mat_to_json(t.b, s.ring())},
                   {"c", mat_to_json(t.c, s.ring())}});
  }
  return {{"format", kSchemeFormat},
          {"ring", std::string(ring_name(s.ring()))},
          {"n", s.n()},
          {"summands", std::move(arr)}};
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

Scheme read_scheme(const std::filesystem::path& path, bool ab_convention) {
  Scheme s = [&] {
    try {
      return scheme_from_json(read_json(path));
    } catch (const json::exception& e) {
      throw FormatError(path.string() + ": " + e.what());
    }
  }();
  return ab_convention ? transpose_gamma(s) : s;
}

std::string canonical_bytes(const Scheme& s) {
  return scheme_to_json(s).dump() + "\n";
}

void write_scheme(const std::filesystem::path& path, const Scheme& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << canonical_bytes(s);
}

}  // namespace mmwb
