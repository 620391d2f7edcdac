#include "mmwb/catalog/catalog.hpp"
#include "mmwb/catalog/dedup.hpp"
#include "mmwb/catalog/histogram.hpp"
#include "mmwb/catalog/solver.hpp"
#include "mmwb/family/introduce.hpp"
#include "mmwb/family/merge.hpp"
#include "mmwb/lift/lift.hpp"
#include "mmwb/sat/encoder.hpp"
#include "mmwb/sat/model.hpp"
#include "mmwb/scheme_io.hpp"
#include "mmwb/symmetry/equivalence.hpp"
#include "mmwb/symmetry/invariants.hpp"
#include "mmwb/symmetry/simplify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace mmwb;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

struct Config {
  long simplify_iterations = 10000;
  std::uint64_t seed = 1;
  long lift_budget = lift::kDefaultNodeBudget;
  std::string solver_command;
  double solver_timeout = 0;

  void load(const fs::path& p) {
    const auto j = read_json(p);
    if (!j.is_object()) throw FormatError("config file must hold an object");
    simplify_iterations = j.value("simplify_iterations", simplify_iterations);
    seed = j.value("seed", seed);
    lift_budget = j.value("lift_budget", lift_budget);
    if (j.contains("solver")) {
      solver_command = j["solver"].value("command", solver_command);
      solver_timeout = j["solver"].value("timeout", solver_timeout);
    }
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw FormatError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw FormatError("cannot write " + p.string());
  out << text;
}

std::string index_string(const BrentIndex& b) {
  std::ostringstream ss;
  ss << "(" << b.i1 + 1 << "," << b.i2 + 1 << "," << b.j1 + 1 << "," << b.j2 + 1 << "," << b.k1 + 1 << ","
     << b.k2 + 1 << ")";
  return ss.str();
}

std::vector<mpz_class> parse_point(const std::string& text) {
  std::vector<mpz_class> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.emplace_back(tok);
    } catch (const std::invalid_argument&) {
      throw FormatError("bad point coordinate '" + tok + "'");
    }
  }
  return out;
}

Scheme as_z2(const Scheme& s) { return s.ring() == Ring::Z2 ? s : reduce_mod2(s); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mmwb: matrix-multiplication scheme workbench"};
  app.require_subcommand(1);
  std::string convention = "transposed";
  std::string config_path;
  app.add_option("--convention", convention, "Convention of imported schemes: transposed (C^T=AB) or ab (C=AB)")
      ->check(CLI::IsMember({"transposed", "ab"}));
  app.add_option("--config", config_path, "JSON file with default budgets, seed and solver template");

  Config cfg;
  int code = kOk;
  auto load = [&](const std::string& p) { return read_scheme(p, convention == "ab"); };
  std::vector<std::pair<CLI::App*, std::function<void()>>> handlers;
  auto on = [&](CLI::App* c, std::function<void()> f) { handlers.emplace_back(c, std::move(f)); };

  // verify
  std::string file, file2, out;
  auto* verify_cmd = app.add_subcommand("verify", "Check a scheme against the Brent equations");
  verify_cmd->add_option("scheme", file)->required();
  on(verify_cmd, [&] {
    const auto rep = verify(load(file));
    if (rep.correct) {
      std::cout << "CORRECT\n";
      return;
    }
    std::cout << "INCORRECT " << rep.violations.size() << " violations\n";
    for (std::size_t i = 0; i < rep.violations.size() && i < 20; ++i)
      std::cout << "  " << index_string(rep.violations[i]) << "\n";
    code = kNegative;
  });

  auto* weight_cmd = app.add_subcommand("weight", "Print the weight of a scheme");
  weight_cmd->add_option("scheme", file)->required();
  on(weight_cmd, [&] { std::cout << weight(load(file)) << "\n"; });

  auto* inv_cmd = app.add_subcommand("invariants", "Print the three rank invariants");
  inv_cmd->add_option("scheme", file)->required();
  on(inv_cmd, [&] {
    const auto k = sym::invariant_key(load(file));
    std::cout << "poly1: " << sym::to_string(k.poly1) << "\npoly2: " << sym::to_string(k.poly2)
              << "\npoly3: " << sym::to_string(k.poly3) << "\n";
  });

  auto* eq_cmd = app.add_subcommand("equivalent", "Decide equivalence of two Z2 schemes");
  eq_cmd->add_option("first", file)->required();
  eq_cmd->add_option("second", file2)->required();
  eq_cmd->add_option("-o,--output", out, "Write the witness here");
  on(eq_cmd, [&] {
    sym::EquivalenceStats st;
    const auto g = sym::equivalent(as_z2(load(file)), as_z2(load(file2)), &st);
    if (!g) {
      std::cout << "NOT EQUIVALENT" << (st.key_mismatch ? " (invariants differ)" : "") << "\n";
      code = kNegative;
      return;
    }
    const std::string w = sym::element_to_json(*g).dump();
    std::cout << "EQUIVALENT nodes=" << st.nodes << "\n" << w << "\n";
    if (!out.empty()) write_text(out, w + "\n");
  });

  long iterations = -1;
  long seed_flag = -1;
  auto* simp_cmd = app.add_subcommand("simplify", "Reduce weight by random group elements");
  simp_cmd->add_option("scheme", file)->required();
  simp_cmd->add_option("--iterations", iterations, "Iteration budget");
  simp_cmd->add_option("--seed", seed_flag, "RNG seed");
  simp_cmd->add_option("-o,--output", out)->required();
  on(simp_cmd, [&] {
    const Scheme s = load(file);
    const auto r = sym::simplify_weight(s, iterations >= 0 ? iterations : cfg.simplify_iterations,
                                        seed_flag >= 0 ? static_cast<std::uint64_t>(seed_flag) : cfg.seed);
    write_scheme(out, r.scheme);
    std::cout << "weight " << r.initial_weight << " -> " << r.final_weight << "\n";
  });

  int n = 3, m = 23;
  std::string mode = "parity", fix_from, diag_file;
  double fix_fraction = 0.5, offdiag = -1;
  bool diag_random = false;
  auto* enc_cmd = app.add_subcommand("encode", "Write a CNF encoding of the Brent equations");
  enc_cmd->add_option("--n", n)->check(CLI::IsMember({2, 3}));
  enc_cmd->add_option("--m", m)->check(CLI::PositiveNumber);
  enc_cmd->add_option("--mode", mode)->check(CLI::IsMember({"parity", "zero-or-two"}));
  enc_cmd->add_option("--fix-from", fix_from, "Known Z2 scheme whose values get pinned");
  enc_cmd->add_option("--fix-fraction", fix_fraction, "Fraction of coefficients to pin");
  enc_cmd->add_option("--offdiag", offdiag, "Fraction of off-diagonal terms forced to zero");
  enc_cmd->add_flag("--diag", diag_random, "Random one-or-two diagonal distribution");
  enc_cmd->add_option("--diag-file", diag_file, "JSON array: summand (1-based) per diagonal term");
  enc_cmd->add_option("--seed", seed_flag);
  enc_cmd->add_option("-o,--output", out, "Output prefix for .cnf and .varmap.json")->required();
  on(enc_cmd, [&] {
    sat::StreamlinePlan plan;
    plan.mode = mode == "parity" ? sat::EncodingMode::Parity : sat::EncodingMode::ZeroOrTwo;
    plan.seed = seed_flag >= 0 ? static_cast<std::uint64_t>(seed_flag) : cfg.seed;
    if (!fix_from.empty()) plan.fixes = sat::KnownFixes{as_z2(load(fix_from)), fix_fraction};
    if (offdiag >= 0) plan.offdiag_zero_fraction = offdiag;
    if (!diag_file.empty()) {
      std::vector<int> d;
      for (int v : read_json(diag_file).get<std::vector<int>>()) d.push_back(v - 1);
      plan.diag_distribution = d;
    } else if (diag_random) {
      plan.diag_distribution = sat::random_diag_distribution(n, m, plan.seed);
    }
    const auto enc = sat::encode_brent(n, m, plan);
    {
      std::ofstream cnf(out + ".cnf");
      if (!cnf) throw FormatError("cannot write " + out + ".cnf");
      enc.formula.write_dimacs(cnf);
    }
    write_text(out + ".varmap.json", enc.varmap.to_json().dump() + "\n");
    std::cout << "vars " << enc.formula.num_vars() << " clauses " << enc.formula.clauses().size()
              << " base " << enc.varmap.base_count() << " equations " << enc.equations << " units "
              << enc.unit_clauses << "\n";
  });

  std::string varmap_path, cnf_path, model_path;
  auto* dec_cmd = app.add_subcommand("decode", "Turn a solver model into a Z2 scheme");
  dec_cmd->add_option("model", model_path)->required();
  dec_cmd->add_option("--varmap", varmap_path)->required();
  dec_cmd->add_option("-o,--output", out)->required();
  on(dec_cmd, [&] {
    const auto vm = sat::VarMap::from_json(read_json(varmap_path));
    const Scheme s = sat::decode_model(sat::parse_model(slurp(model_path)), vm);
    write_scheme(out, s);
    const bool ok = verify(s).correct;
    std::cout << (ok ? "CORRECT" : "INCORRECT") << "\n";
    if (!ok) code = kNegative;
  });

  auto* chk_cmd = app.add_subcommand("check-model", "Check a model against a CNF file");
  chk_cmd->add_option("cnf", cnf_path)->required();
  chk_cmd->add_option("model", model_path)->required();
  on(chk_cmd, [&] {
    const auto f = sat::CnfFormula::parse_dimacs(slurp(cnf_path));
    sat::Assignment a(static_cast<std::size_t>(f.num_vars()), false);
    std::vector<bool> seen(a.size(), false);
    for (int lit : sat::parse_model(slurp(model_path))) {
      const auto v = static_cast<std::size_t>(std::abs(lit));
      if (v == 0 || v > a.size()) throw FormatError("model literal out of range");
      a[v - 1] = lit > 0;
      seen[v - 1] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i]) throw FormatError("model does not assign variable " + std::to_string(i + 1));
    const bool ok = sat::check_assignment(f, a);
    std::cout << (ok ? "SATISFIED" : "UNSATISFIED") << "\n";
    if (!ok) code = kNegative;
  });

  long budget = -1;
  auto* lift_cmd = app.add_subcommand("lift", "Lift a Z2 scheme to a {-1,0,1} integer scheme");
  lift_cmd->add_option("scheme", file)->required();
  lift_cmd->add_option("--budget", budget, "Search node budget");
  lift_cmd->add_option("-o,--output", out);
  on(lift_cmd, [&] {
    lift::SearchOptions opts;
    opts.node_budget = budget >= 0 ? budget : cfg.lift_budget;
    opts.progress = [](long nodes) { std::cerr << "lift: " << nodes << " nodes\n"; };
    const auto r = lift::lift(as_z2(load(file)), opts);
    const std::string stats = " nodes=" + std::to_string(r.nodes) + " variables=" + std::to_string(r.variables) +
                              " remaining=" + std::to_string(r.remaining);
    switch (r.status) {
      case lift::LiftStatus::Lifted:
        std::cout << "LIFTED" << stats << "\n";
        if (!out.empty()) write_scheme(out, *r.scheme);
        else std::cout << scheme_to_json(*r.scheme).dump() << "\n";
        break;
      case lift::LiftStatus::Unliftable:
        std::cout << "UNLIFTABLE" << stats << "\n";
        code = kNegative;
        break;
      case lift::LiftStatus::Inconclusive:
        std::cout << "INCONCLUSIVE" << stats << "\n";
        code = kBudget;
        break;
    }
  });

  auto* fv_cmd = app.add_subcommand("family-verify", "Verify a parameterized family as polynomial identities");
  fv_cmd->add_option("family", file)->required();
  on(fv_cmd, [&] {
    const auto rep = fam::verify_family_exact(fam::read_family(file));
    if (rep.correct) {
      std::cout << "CORRECT\n";
      return;
    }
    std::cout << "INCORRECT " << rep.violations.size() << " violations, first " << index_string(rep.violations[0])
              << "\n";
    code = kNegative;
  });

  std::string point;
  auto* fe_cmd = app.add_subcommand("family-eval", "Substitute integers for the parameters of a family");
  fe_cmd->add_option("family", file)->required();
  fe_cmd->add_option("--point", point, "Comma-separated integers x1,...,xk (default all zero)");
  fe_cmd->add_option("-o,--output", out)->required();
  on(fe_cmd, [&] {
    const auto f = fam::read_family(file);
    auto p = point.empty() ? std::vector<mpz_class>(static_cast<std::size_t>(f.params()), 0) : parse_point(point);
    const Scheme s = fam::substitute_family(f, p);
    write_scheme(out, s);
    const bool ok = verify(s).correct;
    std::cout << (ok ? "CORRECT" : "INCORRECT") << "\n";
    if (!ok) code = kNegative;
  });

  int summand = 0;
  std::string u_tag, v_tag, order = "forward";
  bool sweep = false;
  auto* ip_cmd = app.add_subcommand("introduce-params", "Introduce free parameters into a scheme or family");
  ip_cmd->add_option("input", file, "mmscheme-v1 or mmfamily-v1 file")->required();
  ip_cmd->add_option("--summand", summand, "Summand index (1-based) for a single round");
  ip_cmd->add_option("--u", u_tag, "Factor freed in the chosen summand (alpha, beta, gamma)");
  ip_cmd->add_option("--v", v_tag, "Factor freed in all other summands");
  ip_cmd->add_flag("--sweep", sweep, "Run the full sweep instead of one round");
  ip_cmd->add_option("--order", order)->check(CLI::IsMember({"forward", "backward", "transposed-loops"}));
  ip_cmd->add_option("-o,--output", out)->required();
  on(ip_cmd, [&] {
    const auto j = read_json(file);
    fam::ParamScheme f = j.value("format", std::string()) == fam::kFamilyFormat
                             ? fam::family_from_json(j)
                             : fam::family_from_scheme(convention == "ab" ? transpose_gamma(scheme_from_json(j))
                                                                          : scheme_from_json(j));
    if (sweep) {
      const auto r = fam::introduce_parameters_sweep(f, fam::parse_sweep_order(order));
      for (const auto& d : r.rejections) std::cerr << d << "\n";
      fam::write_family(out, r.family);
      std::cout << "params " << f.params() << " -> " << r.family.params() << " in " << r.rounds.size()
                << " rounds\n";
      return;
    }
    if (summand < 1 || u_tag.empty() || v_tag.empty()) {
      throw FormatError("a single round needs --summand, --u and --v (or use --sweep)");
    }
    const auto r = fam::introduce_parameters(f, summand - 1, fam::parse_factor(u_tag), fam::parse_factor(v_tag));
    if (!r.family) {
      std::cout << "REJECTED " << r.diagnostic << "\n";
      code = kNegative;
      return;
    }
    fam::write_family(out, *r.family);
    std::cout << "params " << f.params() << " -> " << r.family->params() << "\n";
  });

  auto* merge_cmd = app.add_subcommand("merge-check", "Look for a summand-merging reduction");
  merge_cmd->add_option("scheme", file)->required();
  merge_cmd->add_option("-o,--output", out);
  on(merge_cmd, [&] {
    const auto r = fam::merge_reduction(load(file));
    if (!r) {
      std::cout << "NO REDUCTION\n";
      code = kNegative;
      return;
    }
    std::cout << "REDUCED " << r->scheme.m() + 1 << " -> " << r->scheme.m() << " (removed summand "
              << r->removed + 1 << ")\n";
    if (!out.empty()) write_scheme(out, r->scheme);
  });

  std::vector<std::string> files;
  std::string catalog_dir;
  auto* ca_cmd = app.add_subcommand("catalog-add", "Add verified schemes to the catalog");
  ca_cmd->add_option("schemes", files)->required();
  ca_cmd->add_option("--catalog", catalog_dir, "Catalog root (default $MMWB_CATALOG or ./catalog)");
  on(ca_cmd, [&] {
    cat::Catalog c(catalog_dir.empty() ? cat::Catalog::default_root() : fs::path(catalog_dir));
    for (const auto& f : files) {
      const auto r = c.add(load(f));
      std::cout << (r.inserted ? "added " : "exists ") << r.record.id << " " << f << "\n";
    }
  });

  std::string tables_prefix;
  auto* cd_cmd = app.add_subcommand("catalog-dedup", "Group catalog schemes into equivalence classes");
  cd_cmd->add_option("--catalog", catalog_dir);
  cd_cmd->add_option("--tables", tables_prefix, "Write invariant count tables to PREFIX.poly{1,2,3}.csv");
  on(cd_cmd, [&] {
    cat::Catalog c(catalog_dir.empty() ? cat::Catalog::default_root() : fs::path(catalog_dir));
    const auto recs = c.records();
    std::vector<Scheme> schemes;
    for (const auto& r : recs) schemes.push_back(c.load(r));
    const auto d = cat::dedup_catalog(schemes);
    std::vector<Scheme> reps;
    for (const auto& cl : d.classes) {
      reps.push_back(schemes[cl.representative]);
      std::cout << recs[cl.representative].id << " size=" << cl.members.size() << "\n";
    }
    std::cout << d.classes.size() << " classes, " << d.equivalence_calls << " equivalence calls\n";
    if (!tables_prefix.empty()) {
      const auto t = cat::invariant_tables(reps);
      for (int i = 0; i < 3; ++i) write_text(tables_prefix + ".poly" + std::to_string(i + 1) + ".csv", cat::table_csv(t[i]));
    }
  });

  std::string dir;
  auto* hist_cmd = app.add_subcommand("histogram", "Weight histogram of a catalog or directory");
  hist_cmd->add_option("dir", dir)->required();
  hist_cmd->add_option("-o,--output", out, "Write the CSV here instead of stdout");
  on(hist_cmd, [&] {
    const auto h = cat::weight_histogram(dir);
    for (const auto& bad : h.incorrect) std::cerr << "incorrect: " << bad << "\n";
    if (out.empty()) std::cout << cat::histogram_csv(h);
    else write_text(out, cat::histogram_csv(h));
  });

  std::string ring = "int";
  auto* cl_cmd = app.add_subcommand("classical", "Write the classical n^3-summand scheme");
  cl_cmd->add_option("--n", n)->check(CLI::IsMember({2, 3}));
  cl_cmd->add_option("--ring", ring)->check(CLI::IsMember({"z2", "int", "rat"}));
  cl_cmd->add_option("-o,--output", out)->required();
  on(cl_cmd, [&] { write_scheme(out, classical_scheme(n, parse_ring(ring))); });

  std::string solver;
  double timeout = -1;
  auto* solve_cmd = app.add_subcommand("solve", "Run an external SAT solver on a CNF file");
  solve_cmd->add_option("cnf", cnf_path)->required();
  solve_cmd->add_option("--model", model_path, "Model output path")->required();
  solve_cmd->add_option("--solver", solver, "Command template with {cnf} and {model}");
  solve_cmd->add_option("--timeout", timeout, "Seconds before the solver is killed");
  on(solve_cmd, [&] {
    const std::string tmpl = solver.empty() ? cfg.solver_command : solver;
    if (tmpl.empty()) throw FormatError("no solver command given (--solver or config)");
    const auto r = cat::run_solver(tmpl, cnf_path, model_path, timeout >= 0 ? timeout : cfg.solver_timeout);
    if (r.timed_out) {
      std::cout << "TIMEOUT\n";
      code = kBudget;
      return;
    }
    std::cout << "solver exit " << r.exit_status << "\n";
  });

  try {
    app.parse(argc, argv);
    if (!config_path.empty()) cfg.load(config_path);
    for (auto& [cmd, run] : handlers)
      if (cmd->parsed()) run();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}
