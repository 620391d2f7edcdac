#include "mmwb/lift/lift.hpp"

#include <stdexcept>

namespace mmwb::lift {

LiftOutcome lift(const Scheme& s, const SearchOptions& opts) {
  const SignSystem sys = build_sign_system(s);
  LiftOutcome out;
  out.variables = sys.num_vars;
  const SignSystem reduced = eliminate_linear(simplify_sign_system(sys));
  out.remaining = reduced.active_vars();
  const SearchResult r = search_signs(reduced, opts);
  out.nodes = r.nodes;
  switch (r.status) {
    case SearchStatus::Found: {
      Scheme lifted = assign_signs(s, sys, r.assignment);
      if (!verify(lifted).correct || !(reduce_mod2(lifted) == s)) {
        throw std::logic_error("sign assignment does not lift the scheme");
      }
      out.status = LiftStatus::Lifted;
      out.scheme = std::move(lifted);
      break;
    }
    case SearchStatus::Unsatisfiable: out.status = LiftStatus::Unliftable; break;
    case SearchStatus::Inconclusive: out.status = LiftStatus::Inconclusive; break;
  }
  return out;
}

}  // namespace mmwb::lift
