#pragma once

#include "dml/algcore/algebra.hpp"
#include "dml/cohom/skew_form.hpp"

#include <optional>
#include <vector>

namespace dml {

/// True iff theta(e_i e_j, e_k) + theta(e_i, e_j e_k) = 0 on every basis triple.
bool is_cocycle(const Algebra& a, const SkewForm& f);

/// Constraint matrix of the cocycle condition: one row per triple, one column per Delta_ij.
MatrixQ cocycle_constraints(const Algebra& a);

/// Basis of Z^2.
std::vector<SkewForm> cocycle_space(const Algebra& a);

/// delta f (x, y) = f(xy) for the functional f given by its coordinates.
SkewForm coboundary(const Algebra& a, const Vec& f);

/// Basis of B^2 = span{delta(e_k^*)}.
std::vector<SkewForm> coboundary_space(const Algebra& a);

struct CohomologyBasis {
  std::vector<SkewForm> z2;
  std::vector<SkewForm> b2;
  /// Completes b2 to a basis of z2; their classes form a basis of H^2.
  std::vector<SkewForm> h2_reps;
};

CohomologyBasis h2_basis(const Algebra& a);

/// Coordinates of [f] on the classes of basis.h2_reps. Throws NotACocycle.
Vec class_coordinates(const Algebra& a, const SkewForm& f, const CohomologyBasis& basis);

/// Coefficients x with f = sum_i x_i gens_i + (coboundary), or nullopt when f is not in
/// that span. Used to express classes in a named generating set.
std::optional<Vec> coordinates_modulo_coboundaries(const Algebra& a, const SkewForm& f,
                                                   const std::vector<SkewForm>& gens);

/// True iff f is a coboundary.
bool is_coboundary(const Algebra& a, const SkewForm& f);

}  // namespace dml
