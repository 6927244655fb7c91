#include "dml/algcore/algebra.hpp"

#include "dml/error.hpp"

namespace dml {

Algebra::Algebra(std::size_t n) : n_(n), sc_(n * n * n, Rational(0)) {}

Algebra Algebra::from_tensor(std::size_t n, std::vector<Rational> sc) {
  if (sc.size() != n * n * n) throw DimensionMismatch("structure tensor must have n^3 entries");
  Algebra a(n);
  a.sc_ = std::move(sc);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.constant(i, j, k) != -a.constant(j, i, k))
          throw SkewConflict("structure constants are not skew-symmetric at (" + std::to_string(i + 1) +
                             "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
  return a;
}

Algebra Algebra::from_products(std::size_t n, const std::vector<ProductTerm>& terms) {
  Algebra a(n);
  for (const auto& t : terms) {
    if (t.i >= n || t.j >= n || t.k >= n) throw IndexOutOfRange("basis index exceeds algebra dimension");
    if (t.i == t.j) {
      if (is_zero(t.coef)) continue;
      throw SkewConflict("square e" + std::to_string(t.i + 1) + "e" + std::to_string(t.i + 1) +
                         " must vanish in an anticommutative algebra");
    }
    a.sc_[(t.i * n + t.j) * n + t.k] += t.coef;
    a.sc_[(t.j * n + t.i) * n + t.k] -= t.coef;
  }
  return a;
}

Vec Algebra::basis_product(std::size_t i, std::size_t j) const {
  return Vec(sc_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j) * n_),
             sc_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j + 1) * n_));
}

Vec Algebra::product(const Vec& x, const Vec& y) const {
  if (x.size() != n_ || y.size() != n_) throw DimensionMismatch("product: vector length differs from dimension");
  Vec out(n_, Rational(0));
  for (std::size_t i = 0; i < n_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j || is_zero(y[j])) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n_; ++k) {
        const Rational& c = constant(i, j, k);
        if (!is_zero(c)) out[k] += xy * c;
      }
    }
  }
  return out;
}

std::vector<ProductTerm> Algebra::nonzero_products() const {
  std::vector<ProductTerm> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (!is_zero(constant(i, j, k))) out.push_back({i, j, k, constant(i, j, k)});
  return out;
}

MatrixQ Algebra::left_mult(std::size_t i) const {
  MatrixQ l(n_, n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t k = 0; k < n_; ++k) l(k, j) = constant(i, j, k);
  return l;
}

Algebra apply_basis_change(const Algebra& a, const MatrixQ& p) {
  const std::size_t n = a.dim();
  if (p.rows() != n || p.cols() != n) throw DimensionMismatch("basis change matrix must be n x n");
  const auto pinv = inverse(p);
  if (!pinv) throw SingularMatrix("basis change matrix is singular");
  std::vector<ProductTerm> terms;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec v = a.product(p.col_vec(i), p.col_vec(j));
      if (is_zero(v)) continue;
      const Vec x = *pinv * v;
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(x[k])) terms.push_back({i, j, k, x[k]});
    }
  return Algebra::from_products(n, terms);
}

bool verify_isomorphism(const Algebra& a, const Algebra& b, const MatrixQ& p) {
  if (a.dim() != b.dim()) return false;
  try {
    return apply_basis_change(a, p) == b;
  } catch (const SingularMatrix&) {
    return false;
  }
}

Algebra direct_sum_with_trivial(const Algebra& a, std::size_t k) {
  const std::size_t n = a.dim();
  std::vector<ProductTerm> terms = a.nonzero_products();
  return Algebra::from_products(n + k, terms);
}

}  // namespace dml
