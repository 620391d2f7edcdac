#include "mmwb/family/param_scheme.hpp"

#include "mmwb/scheme_io.hpp"

#include <fstream>

namespace mmwb::fam {

ParamScheme::ParamScheme(int n, int params, std::vector<PolySummand> summands)
    : n_(n), params_(params), summands_(std::move(summands)) {
  check_dimension(n);
  if (params < 0) throw FormatError("parameter count must be nonnegative");
  if (summands_.empty()) throw FormatError("a family needs at least one summand");
  for (const auto& t : summands_)
    for (const auto& mat : t) {
      if (static_cast<int>(mat.size()) != n * n) throw FormatError("family matrix has wrong size");
      for (const auto& p : mat)
        if (p.max_variable() > params) throw FormatError("entry uses an undeclared parameter");
    }
}

ParamScheme family_from_scheme(const Scheme& s) {
  const int nn = s.n() * s.n();
  std::vector<PolySummand> out;
  for (const auto& t : s.summands()) {
    PolySummand ps;
    for (int f = 0; f < 3; ++f) {
      ps[f].resize(static_cast<std::size_t>(nn));
      for (int k = 0; k < nn; ++k) {
        const mpq_class& v = t[f].entries()[k];
        if (v.get_den() != 1) throw FormatError("family entries must be integers");
        ps[f][k] = Poly::constant(v.get_num());
      }
    }
    out.push_back(std::move(ps));
  }
  return ParamScheme(s.n(), 0, std::move(out));
}

Scheme substitute_family(const ParamScheme& f, std::span<const mpz_class> point) {
  if (static_cast<int>(point.size()) != f.params()) {
    throw FormatError("point has " + std::to_string(point.size()) + " coordinates, family has " +
                      std::to_string(f.params()) + " parameters");
  }
  const int n = f.n();
  std::vector<Summand> out;
  for (const auto& t : f.summands()) {
    Summand s{Mat(n), Mat(n), Mat(n)};
    for (int k = 0; k < 3; ++k)
      for (int e = 0; e < n * n; ++e) s[k].entries()[e] = mpq_class(t[k][e].evaluate(point));
    out.push_back(std::move(s));
  }
  return Scheme(Ring::Int, n, std::move(out));
}

Poly family_residual(const ParamScheme& f, const BrentIndex& b) {
  Poly sum;
  for (int iota = 0; iota < f.m(); ++iota) {
    const Poly& a = f.entry(iota, 0, b.i1, b.i2);
    if (a.is_zero()) continue;
    const Poly& bb = f.entry(iota, 1, b.j1, b.j2);
    if (bb.is_zero()) continue;
    const Poly& c = f.entry(iota, 2, b.k1, b.k2);
    if (c.is_zero()) continue;
    sum += a * bb * c;
  }
  sum -= Poly(b.rhs());
  return sum;
}

FamilyReport verify_family_exact(const ParamScheme& f) {
  FamilyReport rep;
  for (int idx = 0; idx < brent_count(f.n()); ++idx) {
    const BrentIndex b = BrentIndex::from_linear(f.n(), idx);
    if (!family_residual(f, b).is_zero()) rep.violations.push_back(b);
  }
  rep.correct = rep.violations.empty();
  return rep;
}

namespace {

PolyMat polymat_from_json(const nlohmann::json& j, int n, PolyParser& parser) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw FormatError("family matrix must have n rows");
  PolyMat out;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw FormatError("family matrix rows must have n entries");
    }
    for (const auto& e : row) {
      if (e.is_number_integer()) out.push_back(Poly::constant(mpz_class(e.get<long>())));
      else if (e.is_string()) out.push_back(parser.parse(e.get<std::string>()));
      else throw FormatError("family entries must be strings or integers");
    }
  }
  return out;
}

}  // namespace

ParamScheme family_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("family file must hold an object");
  if (j.value("format", std::string()) != kFamilyFormat) {
    throw FormatError(std::string("family file format must be '") + kFamilyFormat + "'");
  }
  for (const char* key : {"n", "m", "params", "summands"})
    if (!j.contains(key)) throw FormatError(std::string("family file lacks '") + key + "'");
  const int n = j["n"].get<int>(), m = j["m"].get<int>(), k = j["params"].get<int>();
  check_dimension(n);
  std::map<std::string, std::string> macros;
  if (j.contains("macros")) {
    for (const auto& [name, def] : j["macros"].items()) {
      if (!def.is_string()) throw FormatError("macro '" + name + "' must be a string");
      macros[name] = def.get<std::string>();
    }
  }
  PolyParser parser(k, std::move(macros));
  const auto& arr = j["summands"];
  if (!arr.is_array() || static_cast<int>(arr.size()) != m) {
    throw FormatError("family summand count does not match m");
  }
  std::vector<PolySummand> out;
  for (const auto& t : arr) {
    PolySummand ps;
    const char* keys[3] = {"a", "b", "c"};
    for (int f = 0; f < 3; ++f) {
      if (!t.contains(keys[f])) throw FormatError(std::string("summand lacks '") + keys[f] + "'");
      ps[f] = polymat_from_json(t[keys[f]], n, parser);
    }
    out.push_back(std::move(ps));
  }
  return ParamScheme(n, k, std::move(out));
}

nlohmann::json family_to_json(const ParamScheme& f) {
  const int n = f.n();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : f.summands()) {
    nlohmann::json s;
    const char* keys[3] = {"a", "b", "c"};
    for (int k = 0; k < 3; ++k) {
      nlohmann::json rows = nlohmann::json::array();
      for (int r = 0; r < n; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < n; ++c) row.push_back(t[k][r * n + c].to_string());
        rows.push_back(std::move(row));
      }
      s[keys[k]] = std::move(rows);
    }
    arr.push_back(std::move(s));
  }
  return {{"format", kFamilyFormat}, {"n", n}, {"m", f.m()}, {"params", f.params()}, {"summands", arr}};
}

ParamScheme read_family(const std::filesystem::path& path) { return family_from_json(read_json(path)); }

void write_family(const std::filesystem::path& path, const ParamScheme& f) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << family_to_json(f).dump(1) << "\n";
}

}  // namespace mmwb::fam
