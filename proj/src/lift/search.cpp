#include "mmwb/lift/search.hpp"

#include <map>

namespace mmwb::lift {

namespace {

struct Searcher {
  const SearchOptions& opts;
  long nodes = 0;
  bool exhausted = false;

  int branch_variable(const SignSystem& sys) const {
    std::map<int, int> count;
    for (const auto& e : sys.equations) {
      std::vector<int> vars;
      for (const auto& [m, c] : e.terms()) vars.insert(vars.end(), m.begin(), m.end());
      std::sort(vars.begin(), vars.end());
      vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
      for (int v : vars) ++count[v];
    }
    int best = -1, best_count = 0;
    for (const auto& [v, c] : count)
      if (c > best_count) {
        best = v;
        best_count = c;
      }
    return best;
  }

  std::optional<SignSystem> run(const SignSystem& sys) {
    if (sys.unsat) return std::nullopt;
    if (sys.equations.empty()) return sys;
    const int var = branch_variable(sys);
    for (int value : {1, -1}) {
      if (nodes >= opts.node_budget) {
        exhausted = true;
        return std::nullopt;
      }
      ++nodes;
      if (opts.progress && opts.progress_interval > 0 && nodes % opts.progress_interval == 0)
        opts.progress(nodes);
      SignSystem child = sys;
      SignPoly fix = SignPoly::variable(var);
      fix.add_term({}, -value);
      child.equations.insert(std::move(fix));
      child = eliminate_linear(std::move(child));
      if (auto found = run(child)) return found;
      if (exhausted) return std::nullopt;
    }
    return std::nullopt;
  }
};

}  // namespace

SearchResult search_signs(const SignSystem& sys, const SearchOptions& opts) {
  Searcher s{opts};
  SearchResult res;
  std::optional<SignSystem> solved;
  try {
    solved = s.run(eliminate_linear(sys));
  } catch (const std::overflow_error&) {
    s.exhausted = true;
  }
  res.nodes = s.nodes;
  if (solved) {
    res.status = SearchStatus::Found;
    res.assignment = extend_solution(*solved, {});
  } else {
    res.status = s.exhausted ? SearchStatus::Inconclusive : SearchStatus::Unsatisfiable;
  }
  return res;
}

}  // namespace mmwb::lift
