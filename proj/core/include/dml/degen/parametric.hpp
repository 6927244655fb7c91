#pragma once

#include "dml/algcore/algebra.hpp"
#include "dml/algcore/structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dml {

/// Basis E^t_1..E^t_n; row i holds the coordinates of E^t_i in the source basis.
class ParametricBasis {
 public:
  ParametricBasis() = default;
  /// Throws SingularBasis when det(rows) is identically zero, DimensionMismatch if not square.
  explicit ParametricBasis(MatrixT rows);

  static ParametricBasis identity(std::size_t n) { return ParametricBasis(MatrixT::identity(n)); }

  std::size_t dim() const noexcept { return rows_.rows(); }
  const MatrixT& rows() const noexcept { return rows_; }
  RatFunc determinant() const { return dml::determinant(rows_); }
  /// Column form (new basis vectors as columns) at t = t0. Throws std::domain_error at poles.
  MatrixQ at(const Rational& t0) const;

  friend bool operator==(const ParametricBasis&, const ParametricBasis&) = default;

 private:
  MatrixT rows_;
};

/// Structure constants c^k_ij(t) indexed like Algebra::constant.
struct ParametricConstants {
  std::size_t n = 0;
  std::vector<RatFunc> c;
  const RatFunc& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * n + j) * n + k]; }
};

ParametricConstants parametric_constants(const Algebra& a, const ParametricBasis& b);

/// Entrywise t -> 0 limit. Throws PoleAtZero naming the offending (i, j, k).
Algebra limit_algebra(const Algebra& a, const ParametricBasis& b);

enum class ClaimStatus {
  Verified,                 ///< limit equals the target table literally
  VerifiedViaIsomorphism,   ///< limit equals the target after a recorded basis change
  VerifiedUpToFingerprint,  ///< only invariants agree; never counts as a proof
  Unwitnessed,              ///< no parametric basis available
  Failed,                   ///< witness given but it does not produce the target
};

std::string to_string(ClaimStatus s);
bool is_verified(ClaimStatus s);

struct DegenerationClaim {
  std::string source_id;
  std::string target_id;
  std::optional<ParametricBasis> basis;
  /// Optional basis change p (columns = new basis) with apply_basis_change(limit, p) == target.
  std::optional<MatrixQ> target_iso;
  std::string note;
};

struct ClaimReport {
  ClaimStatus status = ClaimStatus::Unwitnessed;
  std::optional<Algebra> limit;
  bool literal = false;
  bool via_isomorphism = false;
  bool fingerprint_equal = false;
  std::string detail;
};

/// Verifies a claim against explicit source and target algebras. Poles and singular bases
/// are reported as Failed with the error text in `detail`.
ClaimReport verify_claim(const Algebra& source, const Algebra& target, const DegenerationClaim& c);

}  // namespace dml
