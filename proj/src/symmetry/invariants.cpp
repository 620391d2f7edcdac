#include "mmwb/symmetry/invariants.hpp"

#include <map>

namespace mmwb::sym {

namespace {

UPoly from_counts(const std::map<int, long>& counts) {
  UPoly p;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it)
    if (it->second != 0) p.emplace_back(it->first, it->second);
  return p;
}

}  // namespace

InvariantKey invariant_key(const std::vector<RankTriple>& profile) {
  std::map<int, long> c1, c2, c3;
  int sa = 0, sb = 0, sc = 0;
  for (const auto& [ra, rb, rc] : profile) {
    ++c1[ra];
    ++c1[rb];
    ++c1[rc];
    ++c2[ra + rb + rc];
    sa += ra;
    sb += rb;
    sc += rc;
  }
  ++c3[sa];
  ++c3[sb];
  ++c3[sc];
  return {from_counts(c1), from_counts(c2), from_counts(c3)};
}

InvariantKey invariant_key(const Scheme& s) { return invariant_key(rank_profile(s)); }

std::string to_string(const UPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : p) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    out += std::to_string(c < 0 ? -c : c) + "*x^" + std::to_string(e);
  }
  return out;
}

std::string to_string(const InvariantKey& k) {
  return to_string(k.poly1) + " | " + to_string(k.poly2) + " | " + to_string(k.poly3);
}

}  // namespace mmwb::sym
