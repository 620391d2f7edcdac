#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mmwb::gf2 {

/// A square matrix of size ≤ 3 over GF(2); bit r*n+c holds entry (r,c).
struct BitMat {
  std::uint16_t bits = 0;

  bool get(int n, int r, int c) const { return (bits >> (r * n + c)) & 1U; }
  void set(int n, int r, int c) { bits |= static_cast<std::uint16_t>(1U << (r * n + c)); }
  int nnz() const { return __builtin_popcount(bits); }
  friend bool operator==(BitMat, BitMat) = default;
  friend auto operator<=>(BitMat, BitMat) = default;
};

BitMat identity(int n);
BitMat mul(int n, BitMat x, BitMat y);
BitMat transpose(int n, BitMat x);
int rank(int n, BitMat x);
bool invertible(int n, BitMat x);
std::optional<BitMat> inverse(int n, BitMat x);

/// Vectors of up to 64 coordinates packed into words.
using Vec = std::uint64_t;

/// Incrementally maintained row-echelon basis over GF(2).
class EchelonBasis {
 public:
  explicit EchelonBasis(int dim) : dim_(dim) {}

  /// Adds v; returns false if v was already in the span.
  bool insert(Vec v);
  bool contains(Vec v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }
  std::span<const Vec> rows() const { return rows_; }

  /// Basis of {x : <r, x> = 0 for every inserted row r}.
  std::vector<Vec> nullspace() const;

 private:
  Vec reduce(Vec v) const;
  int dim_;
  std::vector<Vec> rows_;   // each with a distinct leading bit
  std::vector<int> pivots_;
};

int rank(std::span<const Vec> rows, int dim);
std::vector<Vec> nullspace(std::span<const Vec> rows, int dim);

/// Basis of span(a) ∩ span(b).
std::vector<Vec> intersect(std::span<const Vec> a, std::span<const Vec> b, int dim);

}  // namespace mmwb::gf2
