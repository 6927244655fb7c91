#include "dml/algcore/structure.hpp"

#include "dml/error.hpp"

#include <algorithm>

namespace dml {

DerivationAlgebra derivation_algebra(const Algebra& a) {
  const std::size_t n = a.dim();
  const std::size_t unknowns = n * n;
  MatrixQ sys(0, unknowns);
  Vec row(unknowns);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::fill(row.begin(), row.end(), Rational(0));
        for (std::size_t l = 0; l < n; ++l) row[k * n + l] += a.constant(i, j, l);
        for (std::size_t m = 0; m < n; ++m) {
          row[m * n + i] -= a.constant(m, j, k);
          row[m * n + j] -= a.constant(i, m, k);
        }
        if (!is_zero(row)) sys.append_row(row);
      }
  DerivationAlgebra der;
  const MatrixQ ker = kernel(sys);
  der.dim = ker.rows();
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    MatrixQ d(n, n);
    for (std::size_t x = 0; x < unknowns; ++x) d(x / n, x % n) = ker(r, x);
    der.basis.push_back(std::move(d));
  }
  return der;
}

bool is_derivation(const Algebra& a, const MatrixQ& d) {
  const std::size_t n = a.dim();
  if (d.rows() != n || d.cols() != n) throw DimensionMismatch("derivation matrix must be n x n");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec lhs = d * a.basis_product(i, j);
      Vec rhs = a.product(d.col_vec(i), unit_vec(n, j));
      const Vec r2 = a.product(unit_vec(n, i), d.col_vec(j));
      for (std::size_t k = 0; k < n; ++k) rhs[k] += r2[k];
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace dml
