#pragma once

#include "dml/algcore/algebra.hpp"

#include <cstddef>

/// Deliberately naive solvers used to cross-check the main code paths. They use their own
/// arithmetic (Boost.Multiprecision) and their own elimination routine, and formulate each
/// problem differently from the library.
namespace dml::oracle {

/// dim Z^2 with the full n x n matrix theta as unknowns, skew-symmetry imposed as
/// equations, and the cocycle identity imposed on every basis triple.
std::size_t cocycle_dim(const Algebra& a);

/// dim Der(A) from the Leibniz rule on every ordered pair (i, j), including i >= j.
std::size_t derivation_dim(const Algebra& a);

/// dim Ann(A) from x e_j = 0 for every j, written out coordinate by coordinate.
std::size_t annihilator_dim(const Algebra& a);

/// Rank of the Gram-matrix system for theta-perp of a single form.
std::size_t radical_dim(const std::vector<std::vector<long>>& gram);

}  // namespace dml::oracle
