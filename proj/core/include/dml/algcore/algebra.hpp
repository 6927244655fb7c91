#pragma once

#include "dml/exact/linalg.hpp"
#include "dml/exact/subspace.hpp"

#include <cstddef>
#include <vector>

namespace dml {

/// One nonzero product e_i e_j = coef * e_k (0-based indices).
struct ProductTerm {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Rational coef;
};

/// Finite-dimensional anticommutative algebra given by structure constants
/// e_i e_j = sum_k c^k_{ij} e_k. Skew-symmetry c^k_{ij} = -c^k_{ji} is enforced on
/// construction, so every value of this type is anticommutative.
class Algebra {
 public:
  /// Zero algebra of dimension n.
  explicit Algebra(std::size_t n = 0);

  /// From a full tensor indexed [(i * n + j) * n + k]. Throws SkewConflict if not skew.
  static Algebra from_tensor(std::size_t n, std::vector<Rational> sc);
  /// From products e_i e_j with i != j; the partner e_j e_i is filled in. Repeated
  /// terms accumulate. Throws SkewConflict for i == j, IndexOutOfRange for bad indices.
  static Algebra from_products(std::size_t n, const std::vector<ProductTerm>& terms);

  std::size_t dim() const noexcept { return n_; }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return sc_[(i * n_ + j) * n_ + k];
  }
  const std::vector<Rational>& tensor() const noexcept { return sc_; }

  /// e_i e_j as a coordinate vector.
  Vec basis_product(std::size_t i, std::size_t j) const;
  /// Bilinear extension to arbitrary vectors.
  Vec product(const Vec& x, const Vec& y) const;

  /// Nonzero products e_i e_j with i < j, in lexicographic (i, j, k) order.
  std::vector<ProductTerm> nonzero_products() const;

  /// Left multiplication matrix L_x with L_x y = x y.
  MatrixQ left_mult(std::size_t i) const;

  friend bool operator==(const Algebra& a, const Algebra& b) = default;

 private:
  std::size_t n_;
  std::vector<Rational> sc_;
};

/// Constants of `a` in the basis E_j = sum_i p(i, j) e_i (columns of p are the new basis).
/// Equivalent to the conjugation g * mu with g = p^{-1}. Throws SingularMatrix.
Algebra apply_basis_change(const Algebra& a, const MatrixQ& p);

/// True iff p is invertible and apply_basis_change(a, p) == b.
bool verify_isomorphism(const Algebra& a, const Algebra& b, const MatrixQ& p);

/// a (+) C^k: appends k basis vectors that multiply trivially.
Algebra direct_sum_with_trivial(const Algebra& a, std::size_t k);

}  // namespace dml
