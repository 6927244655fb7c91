#pragma once

#include "dml/algcore/algebra.hpp"
#include "dml/cohom/cohomology.hpp"

#include <vector>

namespace dml {

/// Tuple (theta_1, ..., theta_s) of skew forms on an n-dimensional algebra.
struct CocycleTuple {
  std::size_t algebra_dim = 0;
  std::vector<SkewForm> components;

  CocycleTuple() = default;
  CocycleTuple(std::size_t n, std::vector<SkewForm> comps);
  std::size_t size() const noexcept { return components.size(); }
  friend bool operator==(const CocycleTuple&, const CocycleTuple&) = default;
};

/// theta-perp = {x : theta_i(A, x) = 0 for all i}.
Subspace radical(const Algebra& a, const CocycleTuple& t);

struct ExtensionConditions {
  Subspace radical;
  Subspace radical_and_ann;          ///< theta-perp intersected with Ann(A)
  bool radical_meets_ann = false;    ///< true when the intersection is nonzero
  bool classes_independent_in_h2 = false;
  /// No annihilator component and an s-dimensional added annihilator.
  bool satisfied() const { return !radical_meets_ann && classes_independent_in_h2; }
};

/// Throws NotACocycle when some component fails the cocycle condition.
ExtensionConditions check_extension_conditions(const Algebra& a, const CocycleTuple& t);

/// A_theta on A (+) V: xy + sum_i theta_i(x, y) e_{n+i}. Throws NotACocycle.
Algebra central_extension(const Algebra& a, const CocycleTuple& t);

/// True iff phi is invertible and apply_basis_change(a, phi) == a.
bool verify_automorphism(const Algebra& a, const MatrixQ& phi);

/// (phi theta)(x, y) = theta(phi x, phi y), i.e. Gram matrices B -> phi^T B phi.
/// Throws NotAnAutomorphism.
CocycleTuple act(const Algebra& a, const MatrixQ& phi, const CocycleTuple& t);

/// Same action without the automorphism check; for callers that verified phi already.
CocycleTuple act_unchecked(const MatrixQ& phi, const CocycleTuple& t);

/// Subspace of H^2 coordinates spanned by the classes of the components. Throws NotACocycle.
Subspace h2_span(const Algebra& a, const CocycleTuple& t, const CohomologyBasis& basis);

/// True iff both tuples span the same subspace of H^2. Throws NotACocycle.
bool same_h2_span(const Algebra& a, const CocycleTuple& t1, const CocycleTuple& t2);

}  // namespace dml
