#pragma once

#include "dml/algcore/algebra.hpp"

#include <map>
#include <utility>
#include <vector>

namespace dml {

/// Ann(A) = {x : A x = 0}; two-sided by anticommutativity.
Subspace annihilator(const Algebra& a);

/// A^1 = A, A^{k+1} = A^k A. Ends with the first zero term, or at the first repeated
/// term when the algebra is not nilpotent.
std::vector<Subspace> lower_central_series(const Algebra& a);

bool is_nilpotent(const Algebra& a);

/// span{u w : u in U, w in W}.
Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& w);

struct DerivationAlgebra {
  std::size_t dim = 0;
  /// Each D acts on column coordinate vectors: D e_b = sum_a D(a, b) e_a.
  std::vector<MatrixQ> basis;
};

/// Solves D(e_i e_j) = D(e_i) e_j + e_i D(e_j) for all i < j.
DerivationAlgebra derivation_algebra(const Algebra& a);

/// True iff d satisfies the Leibniz rule on every pair of basis vectors.
bool is_derivation(const Algebra& a, const MatrixQ& d);

/// Isomorphism invariants used to refute degenerations.
struct InvariantFingerprint {
  std::size_t dim = 0;
  std::size_t der_dim = 0;
  std::size_t ann_dim = 0;
  std::vector<std::size_t> lcs_dims;
  /// (k, l) -> dim(A^k A^l), 1-based k, l up to lcs_dims.size().
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> product_dims;

  friend bool operator==(const InvariantFingerprint&, const InvariantFingerprint&) = default;
};

InvariantFingerprint fingerprint(const Algebra& a);

}  // namespace dml
