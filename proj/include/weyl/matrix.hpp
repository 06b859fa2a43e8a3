#pragma once

#include "weyl/scalars.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace weyl {

/// Dense rectangular matrix over one exact ring (BigInt, BigRat, QSqrt2 or
/// MultiPoly). Immutable use after construction is the norm; the generic
/// kernels below only need the ring_* hooks declared next to each ring type.
template <typename Ring>
class Matrix {
 public:
  Matrix(int rows, int cols, const Ring& fill)
      : rows_(rows), cols_(cols), data_(checked_size(rows, cols), fill) {}

  static Matrix from_rows(const std::vector<std::vector<Ring>>& rows) {
    if (rows.empty() || rows.front().empty())
      throw std::invalid_argument("Matrix: empty row set");
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()),
             rows.front().front());
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.front().size())
        throw std::invalid_argument("Matrix: ragged rows");
      for (size_t j = 0; j < rows[i].size(); ++j)
        m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Ring& at(int i, int j) { return data_[index(i, j)]; }
  const Ring& at(int i, int j) const { return data_[index(i, j)]; }

  Matrix leading_submatrix(int size) const {
    Matrix m(size, size, at(0, 0));
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) m.at(i, j) = at(i, j);
    return m;
  }

  void swap_rows(int i, int j) {
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static size_t checked_size(int rows, int cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("Matrix: non-positive dimension");
    return static_cast<size_t>(rows) * static_cast<size_t>(cols);
  }
  size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw std::out_of_range("Matrix: index out of range");
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
  }

  int rows_;
  int cols_;
  std::vector<Ring> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row
/// pivoting. Every division is exact in the ring; works over any integral
/// domain providing the ring_* hooks. The MultiPoly overload (declared with
/// MultiPoly) routes through poly_det instead.
template <typename Ring>
Ring det(const Matrix<Ring>& input) {
  if (!input.is_square()) throw std::invalid_argument("det: matrix must be square");
  const int n = input.rows();
  Matrix<Ring> m = input;
  bool negate = false;
  std::optional<Ring> prev;
  for (int k = 0; k + 1 < n; ++k) {
    int pivot_row = -1;
    for (int i = k; i < n; ++i) {
      if (!ring_is_zero(m.at(i, k))) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) return ring_zero_like(m.at(0, 0));
    if (pivot_row != k) {
      m.swap_rows(pivot_row, k);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Ring t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = prev ? ring_exact_div(t, *prev) : std::move(t);
      }
    }
    prev = m.at(k, k);
  }
  Ring result = m.at(n - 1, n - 1);
  return negate ? -result : result;
}

/// Determinants of the top-left 1x1 ... nxn principal submatrices.
template <typename Ring>
std::vector<Ring> leading_minors(const Matrix<Ring>& m) {
  if (!m.is_square()) throw std::invalid_argument("leading_minors: matrix must be square");
  std::vector<Ring> minors;
  minors.reserve(static_cast<size_t>(m.rows()));
  for (int k = 1; k <= m.rows(); ++k) minors.push_back(det(m.leading_submatrix(k)));
  return minors;
}

/// Sylvester test: all leading principal minors strictly positive. Requires
/// a symmetric input (checked). The elimination pivots of a fraction-free
/// pass are exactly those minors, so a single pass with sign early-out
/// decides the verdict.
template <typename Ring>
bool is_positive_definite(const Matrix<Ring>& input) {
  if (!input.is_square())
    throw std::invalid_argument("is_positive_definite: matrix must be square");
  const int n = input.rows();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(input.at(i, j) == input.at(j, i)))
        throw std::invalid_argument("is_positive_definite: matrix must be symmetric");
  Matrix<Ring> m = input;
  std::optional<Ring> prev;
  for (int k = 0; k < n; ++k) {
    if (ring_sign(m.at(k, k)) <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Ring t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = prev ? ring_exact_div(t, *prev) : std::move(t);
      }
    }
    prev = m.at(k, k);
  }
  return true;
}

}  // namespace weyl
