#pragma once

#include "dml/algcore/algebra.hpp"

#include <array>
#include <string>
#include <vector>

namespace dml {

enum class IdentityKind { Anticommutativity, Antiassociativity, Jacobi };

/// A basis triple (0-based) at which an identity fails, with both sides of it.
/// Antiassociativity: lhs = (e_i e_j) e_k, rhs = -e_i (e_j e_k).
/// Jacobi: lhs = cyclic sum, rhs = 0. Anticommutativity: lhs = e_i e_j, rhs = -e_j e_i.
struct IdentityWitness {
  IdentityKind kind;
  std::array<std::size_t, 3> triple;
  Vec lhs;
  Vec rhs;
};

struct IdentityReport {
  bool anticommutative = true;
  bool antiassociative = true;
  bool jacobi = true;
  bool dual_mock_lie = true;  ///< anticommutative && antiassociative
  std::vector<IdentityWitness> witnesses;
};

/// Checks the identities on all basis triples (equivalent to all vectors by multilinearity).
IdentityReport check_identities(const Algebra& a);

/// Cyclic sum (xy)z + (yz)x + (zx)y.
Vec jacobi_sum(const Algebra& a, const Vec& x, const Vec& y, const Vec& z);

std::string to_string(IdentityKind kind);

}  // namespace dml
