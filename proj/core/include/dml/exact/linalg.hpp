#pragma once

#include "dml/exact/matrix.hpp"

#include <optional>
#include <vector>

namespace dml {

/// In-place Gauss-Jordan elimination to reduced row-echelon form over any field.
/// Returns the pivot column of each nonzero row; zero rows are dropped from `m`.
template <class T>
std::vector<std::size_t> reduce_to_rref(Matrix<T>& m) {
  using Tr = ScalarTraits<T>;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && Tr::is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || Tr::is_zero(m(i, c))) continue;
      const T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!Tr::is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix<T> trimmed(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) trimmed(i, j) = m(i, j);
  m = std::move(trimmed);
  return pivots;
}

/// Inverse over a field, or nullopt when singular.
template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = T(1);
  }
  const auto pivots = reduce_to_rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Determinant by fraction-carrying elimination.
template <class T>
T determinant(Matrix<T> m) {
  using Tr = ScalarTraits<T>;
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && Tr::is_zero(m(p, c))) ++p;
    if (p == n) return T(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const T inv = T(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (Tr::is_zero(m(i, c))) continue;
      const T f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

struct RrefResult {
  MatrixQ rref;                      ///< nonzero rows only
  std::size_t rank = 0;
  MatrixQ kernel;                    ///< rows span {x : m x^T = 0}
  std::vector<std::size_t> pivots;   ///< pivot column of each rref row
};

/// Reduced row-echelon form, rank and a kernel basis (one row per free column).
RrefResult rref(const MatrixQ& m);

/// Basis of {x : m x^T = 0} as rows.
MatrixQ kernel(const MatrixQ& m);

/// Coefficients x with sum_i x_i * rows.row(i) = target, or nullopt.
std::optional<Vec> solve_combination(const MatrixQ& rows, const Vec& target);

std::size_t rank(const MatrixQ& m);

}  // namespace dml
