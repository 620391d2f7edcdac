#include "mmwb/family/param_scheme.hpp"
#include "mmwb/family/merge.hpp"
#include "mmwb/lift/lift.hpp"
#include "mmwb/sat/encoder.hpp"
#include "mmwb/scheme_io.hpp"
#include "mmwb/symmetry/equivalence.hpp"
#include "mmwb/symmetry/invariants.hpp"
#include "mmwb/symmetry/simplify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mmwb;

namespace {

Ring ring_arg(const std::string& name) { return parse_ring(name); }

std::vector<std::tuple<int, int, int, int, int, int>> violations(const std::vector<BrentIndex>& v) {
  std::vector<std::tuple<int, int, int, int, int, int>> out;
  for (const auto& b : v) out.emplace_back(b.i1, b.i2, b.j1, b.j2, b.k1, b.k2);
  return out;
}

struct LiftResult {
  std::string status;
  std::optional<Scheme> scheme;
  long nodes;
  int variables;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Matrix-multiplication scheme workbench";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  py::class_<Scheme>(m, "Scheme")
      .def_static("load", [](const std::string& path, bool ab) { return read_scheme(path, ab); },
                  py::arg("path"), py::arg("ab_convention") = false)
      .def_static("from_json", [](const std::string& text) {
        return scheme_from_json(nlohmann::json::parse(text));
      })
      .def("to_json", [](const Scheme& s) { return scheme_to_json(s).dump(); })
      .def("save", [](const Scheme& s, const std::string& path) { write_scheme(path, s); })
      .def_property_readonly("n", &Scheme::n)
      .def_property_readonly("m", &Scheme::m)
      .def_property_readonly("ring", [](const Scheme& s) { return std::string(ring_name(s.ring())); })
      .def("verify", [](const Scheme& s) { return verify(s).correct; })
      .def("violations", [](const Scheme& s) { return violations(verify(s).violations); })
      .def("weight", [](const Scheme& s) { return weight(s); })
      .def("invariant_key", [](const Scheme& s) { return sym::to_string(sym::invariant_key(s)); })
      .def("reduce_mod2", [](const Scheme& s) { return reduce_mod2(s); })
      .def("__eq__", [](const Scheme& a, const Scheme& b) { return a == b; });

  m.def("classical", [](int n, const std::string& ring) { return classical_scheme(n, ring_arg(ring)); },
        py::arg("n"), py::arg("ring") = "z2");

  m.def("equivalent", [](const Scheme& a, const Scheme& b) -> std::optional<std::string> {
    const auto g = sym::equivalent(a, b);
    if (!g) return std::nullopt;
    return sym::element_to_json(*g).dump();
  }, "Witness as a JSON string, or None");

  m.def("simplify", [](const Scheme& s, long iterations, std::uint64_t seed) {
    return sym::simplify_weight(s, iterations, seed).scheme;
  }, py::arg("scheme"), py::arg("iterations") = 1000, py::arg("seed") = 0);

  py::class_<LiftResult>(m, "LiftResult")
      .def_readonly("status", &LiftResult::status)
      .def_readonly("scheme", &LiftResult::scheme)
      .def_readonly("nodes", &LiftResult::nodes)
      .def_readonly("variables", &LiftResult::variables);

  m.def("lift", [](const Scheme& s, long budget) {
    lift::SearchOptions opts;
    opts.node_budget = budget;
    lift::LiftOutcome o;
    {
      py::gil_scoped_release release;
      o = lift::lift(s, opts);
    }
    const char* names[] = {"LIFTED", "UNLIFTABLE", "INCONCLUSIVE"};
    return LiftResult{names[static_cast<int>(o.status)], o.scheme, o.nodes, o.variables};
  }, py::arg("scheme"), py::arg("budget") = lift::kDefaultNodeBudget);

  m.def("encode", [](int n, int m_, const std::string& mode, std::uint64_t seed) {
    sat::StreamlinePlan plan;
    plan.mode = mode == "zero-or-two" ? sat::EncodingMode::ZeroOrTwo : sat::EncodingMode::Parity;
    plan.seed = seed;
    const sat::Encoding enc = sat::encode_brent(n, m_, plan);
    py::dict d;
    d["dimacs"] = enc.formula.to_dimacs();
    d["varmap"] = enc.varmap.to_json().dump();
    d["num_vars"] = enc.formula.num_vars();
    d["num_clauses"] = enc.formula.size();
    d["base_vars"] = enc.varmap.base_count();
    d["equations"] = enc.equations;
    return d;
  }, py::arg("n"), py::arg("m"), py::arg("mode") = "parity", py::arg("seed") = 0);

  m.def("merge_reduction", [](const Scheme& s) -> std::optional<Scheme> {
    auto r = fam::merge_reduction(s);
    if (!r) return std::nullopt;
    return r->scheme;
  });

  py::class_<fam::ParamScheme>(m, "Family")
      .def_static("load", [](const std::string& path) { return fam::read_family(path); })
      .def_property_readonly("params", &fam::ParamScheme::params)
      .def_property_readonly("m", &fam::ParamScheme::m)
      .def("verify", [](const fam::ParamScheme& f) { return fam::verify_family_exact(f).correct; })
      .def("substitute", [](const fam::ParamScheme& f, const std::vector<long>& point) {
        std::vector<mpz_class> p(point.begin(), point.end());
        return fam::substitute_family(f, p);
      });
}
