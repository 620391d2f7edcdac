#include "mmwb/symmetry/simplify.hpp"

namespace mmwb::sym {

SimplifyResult simplify_weight(const Scheme& s, long iterations, std::uint64_t seed) {
  const int n = s.n();
  Rng rng(seed);
  SimplifyResult res{s, identity_element(n), weight(s), weight(s), 0};
  if (s.ring() == Ring::Z2) {
    PackedScheme cur = pack(s);
    long w = packed_weight(cur);
    for (long it = 0; it < iterations; ++it) {
      const PackedElement g = random_packed(n, rng);
      PackedScheme next = apply_packed(g, cur, n);
      const long nw = packed_weight(next);
      if (nw < w) {
        cur = std::move(next);
        w = nw;
        res.applied = compose(unpack(g, n), res.applied, Ring::Z2);
        ++res.improvements;
      }
    }
    res.scheme = unpack(cur, n);
    res.final_weight = w;
    return res;
  }
  for (long it = 0; it < iterations; ++it) {
    const GroupElement g = random_element(n, s.ring(), rng);
    Scheme next = apply_group(g, res.scheme);
    const long nw = weight(next);
    if (nw < res.final_weight) {
      res.scheme = std::move(next);
      res.final_weight = nw;
      res.applied = compose(g, res.applied, s.ring());
      ++res.improvements;
    }
  }
  return res;
}

}  // namespace mmwb::sym
