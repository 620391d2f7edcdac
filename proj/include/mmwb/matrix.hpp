#pragma once

#include "mmwb/ring.hpp"

#include <optional>
#include <span>
#include <vector>

namespace mmwb {

/// Square matrix of exact rationals. Ring semantics (mod 2, integrality) are
/// applied by the caller through normalize().
class Mat {
 public:
  Mat() = default;
  explicit Mat(int n) : n_(n), a_(static_cast<std::size_t>(n * n)) {}

  static Mat unit(int n, int r, int c);
  static Mat identity(int n);

  int dim() const { return n_; }
  const mpq_class& operator()(int r, int c) const { return a_[idx(r, c)]; }
  mpq_class& operator()(int r, int c) { return a_[idx(r, c)]; }
  std::span<const mpq_class> entries() const { return a_; }
  std::span<mpq_class> entries() { return a_; }

  int nnz() const;
  bool is_zero() const { return nnz() == 0; }
  Mat transposed() const;
  Mat normalized(Ring r) const;

  friend Mat operator*(const Mat& x, const Mat& y);
  friend Mat operator+(const Mat& x, const Mat& y);
  friend Mat operator*(const mpq_class& s, const Mat& x);
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.n_ == y.n_ && x.a_ == y.a_;
  }

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r * n_ + c);
  }

  int n_ = 0;
  std::vector<mpq_class> a_;
};

/// Rank over the ring's fraction field: Z2 for Z2, Q otherwise.
int rank(const Mat& m, Ring r);

/// Inverse in the ring, or nullopt when m is singular (or, over Int, when the
/// inverse is not integral).
std::optional<Mat> inverse(const Mat& m, Ring r);

}  // namespace mmwb
