#include "mmwb/matrix.hpp"

#include <utility>

namespace mmwb {

Mat Mat::unit(int n, int r, int c) {
  Mat m(n);
  m(r, c) = 1;
  return m;
}

Mat Mat::identity(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

int Mat::nnz() const {
  int k = 0;
  for (const auto& v : a_) k += (v != 0);
  return k;
}

Mat Mat::transposed() const {
  Mat t(n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::normalized(Ring r) const {
  Mat out(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = normalize(r, a_[i]);
  return out;
}

Mat operator*(const Mat& x, const Mat& y) {
  const int n = x.n_;
  Mat out(n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      if (x(r, k) == 0) continue;
      for (int c = 0; c < n; ++c) out(r, c) += x(r, k) * y(k, c);
    }
  return out;
}

Mat operator+(const Mat& x, const Mat& y) {
  Mat out(x);
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += y.a_[i];
  return out;
}

Mat operator*(const mpq_class& s, const Mat& x) {
  Mat out(x);
  for (auto& v : out.a_) v *= s;
  return out;
}

namespace {

// Row reduction over Q, or over GF(2) when mod2 is set. Returns the rank and
// leaves the reduced rows in `rows`.
int eliminate(std::vector<std::vector<mpq_class>>& rows, int cols, bool mod2) {
  const int nrows = static_cast<int>(rows.size());
  int rank = 0;
  for (int c = 0; c < cols && rank < nrows; ++c) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r) {
      if (rows[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const mpq_class inv = 1 / rows[rank][c];
    for (auto& v : rows[rank]) v *= inv;
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const mpq_class f = rows[r][c];
      for (int k = 0; k < static_cast<int>(rows[r].size()); ++k) {
        rows[r][k] -= f * rows[rank][k];
        if (mod2) {
          mpz_class z = rows[r][k].get_num() % 2;
          if (z < 0) z += 2;
          rows[r][k] = z;
        }
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int rank(const Mat& m, Ring r) {
  const int n = m.dim();
  std::vector<std::vector<mpq_class>> rows(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rows[i][j] = r == Ring::Z2 ? normalize(Ring::Z2, m(i, j)) : m(i, j);
  return eliminate(rows, n, r == Ring::Z2);
}

std::optional<Mat> inverse(const Mat& m, Ring r) {
  const int n = m.dim();
  const bool mod2 = r == Ring::Z2;
  std::vector<std::vector<mpq_class>> rows(n, std::vector<mpq_class>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      rows[i][j] = mod2 ? normalize(Ring::Z2, m(i, j)) : m(i, j);
    rows[i][n + i] = 1;
  }
  if (eliminate(rows, n, mod2) < n) return std::nullopt;
  Mat inv(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      inv(i, j) = rows[i][n + j];
      if (r == Ring::Int && inv(i, j).get_den() != 1) return std::nullopt;
    }
  return inv;
}

}  // namespace mmwb
