#include "dml/algcore/structure.hpp"

#include "dml/error.hpp"

namespace dml {

Subspace annihilator(const Algebra& a) {
  const std::size_t n = a.dim();
  // x in Ann iff e_i x = 0 for every i: stack L_{e_i} and take the kernel.
  MatrixQ stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) stacked(i * n + k, j) = a.constant(i, j, k);
  return Subspace::span(n, kernel(stacked));
}

Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != a.dim() || w.ambient_dim() != a.dim())
    throw DimensionMismatch("subspace_product: ambient dimension differs from algebra dimension");
  std::vector<Vec> prods;
  for (const auto& x : u.basis_vectors())
    for (const auto& y : w.basis_vectors()) {
      Vec p = a.product(x, y);
      if (!is_zero(p)) prods.push_back(std::move(p));
    }
  return Subspace::span(a.dim(), prods);
}

std::vector<Subspace> lower_central_series(const Algebra& a) {
  const std::size_t n = a.dim();
  const Subspace whole = Subspace::full(n);
  std::vector<Subspace> series{whole};
  while (!series.back().is_zero()) {
    Subspace next = subspace_product(a, series.back(), whole);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(const Algebra& a) { return lower_central_series(a).back().is_zero(); }

InvariantFingerprint fingerprint(const Algebra& a) {
  InvariantFingerprint fp;
  fp.dim = a.dim();
  fp.der_dim = derivation_algebra(a).dim;
  fp.ann_dim = annihilator(a).dim();
  const auto lcs = lower_central_series(a);
  for (const auto& s : lcs) fp.lcs_dims.push_back(s.dim());
  for (std::size_t k = 0; k < lcs.size(); ++k)
    for (std::size_t l = 0; l < lcs.size(); ++l)
      fp.product_dims[{k + 1, l + 1}] = subspace_product(a, lcs[k], lcs[l]).dim();
  return fp;
}

}  // namespace dml
