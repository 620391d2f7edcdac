#include "mmwb/gf2.hpp"

namespace mmwb::gf2 {

BitMat identity(int n) {
  BitMat m;
  for (int i = 0; i < n; ++i) m.set(n, i, i);
  return m;
}

BitMat mul(int n, BitMat x, BitMat y) {
  BitMat out;
  const unsigned row_mask = (1U << n) - 1;
  for (int r = 0; r < n; ++r) {
    unsigned acc = 0;
    unsigned xr = (x.bits >> (r * n)) & row_mask;
    for (int k = 0; k < n; ++k)
      if ((xr >> k) & 1U) acc ^= (y.bits >> (k * n)) & row_mask;
    out.bits |= static_cast<std::uint16_t>(acc << (r * n));
  }
  return out;
}

BitMat transpose(int n, BitMat x) {
  BitMat t;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (x.get(n, r, c)) t.set(n, c, r);
  return t;
}

int rank(int n, BitMat x) {
  std::array<unsigned, 3> rows{};
  const unsigned row_mask = (1U << n) - 1;
  for (int r = 0; r < n; ++r) rows[r] = (x.bits >> (r * n)) & row_mask;
  int rk = 0;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = rk; r < n; ++r)
      if ((rows[r] >> c) & 1U) { p = r; break; }
    if (p < 0) continue;
    std::swap(rows[rk], rows[p]);
    for (int r = 0; r < n; ++r)
      if (r != rk && ((rows[r] >> c) & 1U)) rows[r] ^= rows[rk];
    ++rk;
  }
  return rk;
}

bool invertible(int n, BitMat x) {
  // Tables for the two supported sizes: 2^4 and 2^9 matrices.
  static const auto table = [] {
    std::array<std::array<bool, 512>, 4> t{};
    for (int n = 2; n <= 3; ++n)
      for (unsigned b = 0; b < (1U << (n * n)); ++b)
        t[n][b] = rank(n, BitMat{static_cast<std::uint16_t>(b)}) == n;
    return t;
  }();
  if (n == 2 || n == 3) return table[n][x.bits];
  return rank(n, x) == n;
}

std::optional<BitMat> inverse(int n, BitMat x) {
  std::array<unsigned, 3> rows{};
  std::array<unsigned, 3> inv{};
  const unsigned row_mask = (1U << n) - 1;
  for (int r = 0; r < n; ++r) {
    rows[r] = (x.bits >> (r * n)) & row_mask;
    inv[r] = 1U << r;
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if ((rows[r] >> c) & 1U) { p = r; break; }
    if (p < 0) return std::nullopt;
    std::swap(rows[c], rows[p]);
    std::swap(inv[c], inv[p]);
    for (int r = 0; r < n; ++r)
      if (r != c && ((rows[r] >> c) & 1U)) {
        rows[r] ^= rows[c];
        inv[r] ^= inv[c];
      }
  }
  BitMat out;
  for (int r = 0; r < n; ++r) out.bits |= static_cast<std::uint16_t>(inv[r] << (r * n));
  return out;
}

Vec EchelonBasis::reduce(Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if ((v >> pivots_[i]) & 1U) v ^= rows_[i];
  return v;
}

bool EchelonBasis::contains(Vec v) const { return reduce(v) == 0; }

bool EchelonBasis::insert(Vec v) {
  v = reduce(v);
  if (v == 0) return false;
  const int p = __builtin_ctzll(v);
  for (auto& r : rows_)
    if ((r >> p) & 1U) r ^= v;
  rows_.push_back(v);
  pivots_.push_back(p);
  return true;
}

std::vector<Vec> EchelonBasis::nullspace() const {
  Vec pivot_mask = 0;
  for (int p : pivots_) pivot_mask |= Vec{1} << p;
  std::vector<Vec> out;
  for (int f = 0; f < dim_; ++f) {
    if ((pivot_mask >> f) & 1U) continue;
    Vec x = Vec{1} << f;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if ((rows_[i] >> f) & 1U) x |= Vec{1} << pivots_[i];
    out.push_back(x);
  }
  return out;
}

int rank(std::span<const Vec> rows, int dim) {
  EchelonBasis b(dim);
  for (Vec v : rows) b.insert(v);
  return b.rank();
}

std::vector<Vec> nullspace(std::span<const Vec> rows, int dim) {
  EchelonBasis b(dim);
  for (Vec v : rows) b.insert(v);
  return b.nullspace();
}

std::vector<Vec> intersect(std::span<const Vec> a, std::span<const Vec> b, int dim) {
  EchelonBasis ann(dim);
  for (Vec v : nullspace(a, dim)) ann.insert(v);
  for (Vec v : nullspace(b, dim)) ann.insert(v);
  return ann.nullspace();
}

}  // namespace mmwb::gf2
