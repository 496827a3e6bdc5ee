#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "galg/ring.hpp"

namespace galg {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix. Entries belong to whichever Ring the caller
/// passes to the arithmetic helpers below.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Scalar& fill)
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

  static Matrix zero(const Ring& R, std::size_t rows, std::size_t cols) { return {rows, cols, R.zero()}; }
  static Matrix identity(const Ring& R, std::size_t n);
  /// Throws std::invalid_argument on ragged input.
  static Matrix from_rows(std::size_t cols, std::span<const Vec> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Scalar> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  Vec column(std::size_t j) const;
  const std::vector<Scalar>& entries() const { return entries_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Matrix mul(const Ring& R, const Matrix& a, const Matrix& b);
Vec apply(const Ring& R, const Matrix& a, std::span<const Scalar> v);
Matrix add(const Ring& R, const Matrix& a, const Matrix& b);
Matrix sub(const Ring& R, const Matrix& a, const Matrix& b);
Matrix scale(const Ring& R, const Scalar& c, const Matrix& a);
Matrix transpose(const Matrix& a);
bool is_zero(const Ring& R, const Matrix& a);

Vec zero_vec(const Ring& R, std::size_t n);
Vec unit_vec(const Ring& R, std::size_t n, std::size_t i);
Vec add(const Ring& R, std::span<const Scalar> a, std::span<const Scalar> b);
Vec scale(const Ring& R, const Scalar& c, std::span<const Scalar> v);
bool is_zero(const Ring& R, std::span<const Scalar> v);

/// Block-diagonal matrix with the given blocks.
Matrix block_diagonal(const Ring& R, std::span<const Matrix> blocks);

}  // namespace galg
