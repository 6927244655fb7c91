#pragma once

#include "dml/exact/matrix.hpp"

#include <cstddef>
#include <string>

namespace dml {

/// Number of coordinates Delta_ij with i < j on an n-dimensional space.
inline std::size_t num_pairs(std::size_t n) { return n * (n - 1) / 2; }

/// Position of Delta_ij (i < j, 0-based) in the dense coordinate vector. Pairs are
/// ordered (0,1), (0,2), ..., (0,n-1), (1,2), ...
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);

/// Skew bilinear form on Q^n stored by its coordinates on Delta_ij, i < j.
class SkewForm {
 public:
  explicit SkewForm(std::size_t n = 0) : n_(n), coords_(num_pairs(n), Rational(0)) {}

  static SkewForm from_coords(std::size_t n, Vec coords);
  /// Delta_ij for i != j; Delta_ji = -Delta_ij. Throws DiagonalDelta for i == j.
  static SkewForm delta(std::size_t n, std::size_t i, std::size_t j);
  /// From a Gram matrix B(j, k) = theta(e_j, e_k). Throws DimensionMismatch if not skew.
  static SkewForm from_gram(const MatrixQ& b);

  std::size_t dim() const noexcept { return n_; }
  const Vec& coords() const noexcept { return coords_; }

  /// theta(e_i, e_j).
  Rational value(std::size_t i, std::size_t j) const;
  /// Adds c * Delta_ij.
  void add(std::size_t i, std::size_t j, const Rational& c);

  Rational eval(const Vec& x, const Vec& y) const;
  MatrixQ gram() const;
  bool is_zero() const { return dml::is_zero(coords_); }

  SkewForm& operator+=(const SkewForm& o);
  SkewForm& operator-=(const SkewForm& o);
  friend SkewForm operator+(SkewForm a, const SkewForm& b) { return a += b; }
  friend SkewForm operator-(SkewForm a, const SkewForm& b) { return a -= b; }
  friend SkewForm operator*(const Rational& s, SkewForm a);
  friend bool operator==(const SkewForm&, const SkewForm&) = default;

  /// Text such as "[d16]-[d25]+[d34]"; "0" for the zero form.
  std::string to_string() const;

 private:
  std::size_t n_;
  Vec coords_;
};

}  // namespace dml
