#include "galg/matrix.hpp"

#include <stdexcept>

namespace galg {

Matrix Matrix::identity(const Ring& R, std::size_t n) {
  Matrix m = zero(R, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = R.one();
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::span<const Vec> rows) {
  Matrix m;
  m.rows_ = rows.size();
  m.cols_ = cols;
  m.entries_.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("ragged matrix rows");
    m.entries_.insert(m.entries_.end(), r.begin(), r.end());
  }
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
  return c;
}

Matrix mul(const Ring& R, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  Matrix c = Matrix::zero(R, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (R.is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& y = b(k, j);
        if (!R.is_zero(y)) c(i, j) = R.add(c(i, j), R.mul(x, y));
      }
    }
  return c;
}

Vec apply(const Ring& R, const Matrix& a, std::span<const Scalar> v) {
  if (a.cols() != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vec out = zero_vec(R, a.rows());
  for (std::size_t k = 0; k < a.cols(); ++k) {
    if (R.is_zero(v[k])) continue;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (!R.is_zero(a(i, k))) out[i] = R.add(out[i], R.mul(a(i, k), v[k]));
  }
  return out;
}

Matrix add(const Ring& R, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = R.add(a(i, j), b(i, j));
  return c;
}

Matrix sub(const Ring& R, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix difference shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = R.sub(a(i, j), b(i, j));
  return c;
}

Matrix scale(const Ring& R, const Scalar& s, const Matrix& a) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = R.mul(s, a(i, j));
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows(), Scalar{});
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

bool is_zero(const Ring& R, const Matrix& a) { return is_zero(R, std::span<const Scalar>(a.entries())); }

Vec zero_vec(const Ring& R, std::size_t n) { return Vec(n, R.zero()); }

Vec unit_vec(const Ring& R, std::size_t n, std::size_t i) {
  Vec v = zero_vec(R, n);
  v.at(i) = R.one();
  return v;
}

Vec add(const Ring& R, std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = R.add(a[i], b[i]);
  return out;
}

Vec scale(const Ring& R, const Scalar& c, std::span<const Scalar> v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = R.mul(c, v[i]);
  return out;
}

bool is_zero(const Ring& R, std::span<const Scalar> v) {
  for (const auto& x : v)
    if (!R.is_zero(x)) return false;
  return true;
}

Matrix block_diagonal(const Ring& R, std::span<const Matrix> blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) rows += b.rows(), cols += b.cols();
  Matrix m = Matrix::zero(R, rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

}  // namespace galg
