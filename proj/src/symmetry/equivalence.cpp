#include "mmwb/symmetry/equivalence.hpp"

#include "mmwb/symmetry/invariants.hpp"

#include <stdexcept>

namespace mmwb::sym {

namespace {

using gf2::BitMat;
using gf2::EchelonBasis;
using gf2::Vec;

struct Matcher {
  int n, nn, m;
  PackedScheme t;       // s1 after the permutation
  PackedScheme target;  // s2
  std::vector<std::array<int, 3>> t_ranks, target_ranks;
  EquivalenceStats& stats;
  std::array<BitMat, 3> found{};

  // Rows of U·A = A′·V, V·B = B′·W, W·C = C′·U for one summand pair, with
  // U, V, W occupying bit blocks [0,nn), [nn,2nn), [2nn,3nn).
  void add_constraints(EchelonBasis& basis, const PackedSummand& x, const PackedSummand& y) const {
    for (int f = 0; f < 3; ++f) {
      const int lb = f * nn, rb = ((f + 1) % 3) * nn;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          Vec row = 0;
          for (int k = 0; k < n; ++k) {
            if (x[f].get(n, k, c)) row ^= Vec{1} << (lb + r * n + k);
            if (y[f].get(n, r, k)) row ^= Vec{1} << (rb + k * n + c);
          }
          if (row != 0) basis.insert(row);
        }
    }
  }

  std::array<BitMat, 3> split(Vec x) const {
    const Vec mask = (Vec{1} << nn) - 1;
    return {BitMat{static_cast<std::uint16_t>(x & mask)},
            BitMat{static_cast<std::uint16_t>((x >> nn) & mask)},
            BitMat{static_cast<std::uint16_t>((x >> (2 * nn)) & mask)}};
  }

  bool invertible_point(const std::vector<Vec>& basis) {
    const int d = static_cast<int>(basis.size());
    if (d > stats.max_dim) stats.max_dim = d;
    if (d > kMaxEnumerationDim) {
      throw std::runtime_error("equivalence search: subspace of dimension " + std::to_string(d) +
                               " exceeds the enumeration limit " +
                               std::to_string(kMaxEnumerationDim));
    }
    Vec x = 0;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << d); ++i) {
      x ^= basis[static_cast<std::size_t>(__builtin_ctzll(i))];
      ++stats.enumerated;
      const auto xs = split(x);
      if (gf2::invertible(n, xs[0]) && gf2::invertible(n, xs[1]) && gf2::invertible(n, xs[2])) {
        found = xs;
        return true;
      }
    }
    return false;
  }

  bool search(int k, const EchelonBasis& constraints, std::uint64_t used) {
    if (k == m) return true;
    for (int j = 0; j < m; ++j) {
      if ((used >> j) & 1U) continue;
      if (t_ranks[k] != target_ranks[j]) continue;
      ++stats.nodes;
      EchelonBasis next = constraints;
      add_constraints(next, t[k], target[j]);
      if (!invertible_point(next.nullspace())) continue;
      if (search(k + 1, next, used | (std::uint64_t{1} << j))) return true;
    }
    return false;
  }
};

std::vector<std::array<int, 3>> ranks_of(const PackedScheme& s, int n) {
  std::vector<std::array<int, 3>> out;
  for (const auto& t : s) out.push_back({gf2::rank(n, t[0]), gf2::rank(n, t[1]), gf2::rank(n, t[2])});
  return out;
}

}  // namespace

std::optional<GroupElement> equivalent(const Scheme& s1, const Scheme& s2, EquivalenceStats* stats) {
  if (s1.ring() != Ring::Z2 || s2.ring() != Ring::Z2) {
    throw FormatError("equivalence is decided over Z2 only");
  }
  if (s1.n() != s2.n() || s1.m() != s2.m()) throw FormatError("schemes differ in shape");
  if (s1.m() > 64) throw FormatError("equivalence supports at most 64 summands");
  EquivalenceStats local;
  EquivalenceStats& st = stats ? *stats : local;
  if (invariant_key(s1) != invariant_key(s2)) {
    st.key_mismatch = true;
    return std::nullopt;
  }
  const int n = s1.n();
  const PackedScheme p1 = pack(s1), p2 = pack(s2);
  for (Perm perm : kAllPerms) {
    PackedScheme t;
    for (const auto& x : p1) t.push_back(permute(x, perm, n));
    Matcher mt{n, n * n, s1.m(), t, p2, ranks_of(t, n), ranks_of(p2, n), st, {}};
    EchelonBasis empty(3 * n * n);
    if (mt.search(0, empty, 0)) return unpack(PackedElement{mt.found, perm}, n);
  }
  return std::nullopt;
}

}  // namespace mmwb::sym
