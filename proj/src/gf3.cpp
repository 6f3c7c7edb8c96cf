#include "witt/gf3.hpp"

#include <ostream>
#include <utility>

namespace witt {

std::ostream& operator<<(std::ostream& os, Scalar s) { return os << s.value(); }

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
  return os << v[0] << ':' << v[1] << ':' << v[2];
}

Scalar inv(Scalar x) {
  if (x.is_zero()) throw std::domain_error("inv: zero has no inverse in GF(3)");
  // 1*1 = 1 and 2*2 = 4 = 1.
  return x;
}

Mat::Mat(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0 || rows > kMaxDim || cols > kMaxDim)
    throw std::domain_error("Mat: dimensions out of range");
  data_.assign(static_cast<std::size_t>(rows * cols), Scalar{});
}

Mat::Mat(int rows, int cols, std::initializer_list<int> entries) : Mat(rows, cols) {
  if (entries.size() != data_.size()) throw std::domain_error("Mat: wrong number of entries");
  std::size_t i = 0;
  for (int e : entries) data_[i++] = Scalar(e);
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vec Mat::row(int r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

void Mat::set_row(int r, const Vec& values) {
  if (static_cast<int>(values.size()) != cols_) throw std::domain_error("Mat::set_row: width mismatch");
  std::copy(values.begin(), values.end(), data_.begin() + r * cols_);
}

Mat Mat::with_row(const Vec& values) const {
  Mat out(rows_ + 1, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  out.set_row(rows_, values);
  return out;
}

Vec Mat::operator*(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::domain_error("Mat*Vec: width mismatch");
  Vec out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw std::domain_error("Mat*Mat: shape mismatch");
  Mat out(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int c = 0; c < b.cols_; ++c)
      for (int k = 0; k < a.cols_; ++k) out(r, c) += a(r, k) * b(k, c);
  return out;
}

Echelon rref(const Mat& m) {
  Mat a = m;
  std::vector<int> pivots;
  int lead = 0;
  for (int c = 0; c < a.cols() && lead < a.rows(); ++c) {
    int p = lead;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != lead)
      for (int k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(lead, k));
    const Scalar s = inv(a(lead, c));
    for (int k = 0; k < a.cols(); ++k) a(lead, k) *= s;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      const Scalar f = a(r, c);
      for (int k = 0; k < a.cols(); ++k) a(r, k) -= f * a(lead, k);
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(a), std::move(pivots)};
}

int rank(const Mat& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<Vec> null_space(const Mat& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : e.pivots) is_pivot[p] = true;

  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar det(const Mat& m) {
  if (m.rows() != m.cols()) throw std::domain_error("det: matrix is not square");
  Mat a = m;
  Scalar result = 1;
  const int n = a.rows();
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (int k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      result = -result;
    }
    result *= a(c, c);
    const Scalar s = inv(a(c, c));
    for (int r = c + 1; r < n; ++r) {
      const Scalar f = a(r, c) * s;
      if (f.is_zero()) continue;
      for (int k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return result;
}

}  // namespace witt
