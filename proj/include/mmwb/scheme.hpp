#pragma once

#include "mmwb/matrix.hpp"
#include "mmwb/ring.hpp"

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace mmwb {

/// One rank-one tensor A ⊗ B ⊗ C.
struct Summand {
  Mat a, b, c;

  const Mat& operator[](int f) const { return f == 0 ? a : (f == 1 ? b : c); }
  Mat& operator[](int f) { return f == 0 ? a : (f == 1 ? b : c); }
  friend bool operator==(const Summand&, const Summand&) = default;
};

/// A decomposition Σ A_ι ⊗ B_ι ⊗ C_ι of the n×n matrix multiplication tensor
/// in the transposed convention (C⊤ = AB). Summand order is kept as given.
class Scheme {
 public:
  /// Validates n ∈ {2,3}, m ≥ 1, shapes, and ring membership of every entry.
  Scheme(Ring ring, int n, std::vector<Summand> summands);

  Ring ring() const { return ring_; }
  int n() const { return n_; }
  int m() const { return static_cast<int>(summands_.size()); }
  const std::vector<Summand>& summands() const { return summands_; }
  const Summand& operator[](int i) const { return summands_[i]; }

  friend bool operator==(const Scheme&, const Scheme&) = default;

 private:
  Ring ring_;
  int n_;
  std::vector<Summand> summands_;
};

/// Zero-based index of one Brent equation.
struct BrentIndex {
  int i1, i2, j1, j2, k1, k2;

  /// 1 iff i2=j1, j2=k1 and k2=i1.
  int rhs() const { return i2 == j1 && j2 == k1 && k2 == i1; }
  int linear(int n) const { return ((((i1 * n + i2) * n + j1) * n + j2) * n + k1) * n + k2; }
  static BrentIndex from_linear(int n, int idx);
  friend bool operator==(const BrentIndex&, const BrentIndex&) = default;
};

inline int brent_count(int n) { return n * n * n * n * n * n; }

struct VerifyReport {
  bool correct = false;
  std::vector<BrentIndex> violations;
};

void check_dimension(int n);

/// Σ_{i,j,k} E_{i,k} ⊗ E_{k,j} ⊗ E_{j,i}.
Scheme classical_scheme(int n, Ring ring);

/// Triple-product sums for all n^6 Brent indices, reduced into the ring.
std::vector<mpq_class> brent_sums(const Scheme& s);

VerifyReport verify(const Scheme& s);
mpq_class brent_residual(const Scheme& s, const BrentIndex& idx);

/// Number of (ι, i1..k2) whose triple product is nonzero.
long weight(const Scheme& s);

using RankTriple = std::tuple<int, int, int>;
/// Sorted multiset of factor ranks, one triple per summand.
std::vector<RankTriple> rank_profile(const Scheme& s);

/// Replaces summand i by (λa·A, λb·B, λc·C); requires λa·λb·λc = 1 and units.
Scheme scale_summand(const Scheme& s, int i, const mpq_class& la,
                     const mpq_class& lb, const mpq_class& lc);

Scheme reduce_mod2(const Scheme& s);

/// Converts γ factors between C=AB and C⊤=AB conventions.
Scheme transpose_gamma(const Scheme& s);

/// Reinterprets an integral scheme in another ring (Z2 → Int lifts 0/1 entries).
Scheme change_ring(const Scheme& s, Ring ring);

}  // namespace mmwb
