#pragma once

#include "dml/algcore/structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dml {

/// One semicontinuity check of a candidate degeneration a -> b.
struct ScreenCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct ScreenReport {
  std::vector<ScreenCheck> checks;
  bool refuted() const;
  /// Name of the first failing check, if any.
  std::optional<std::string> first_failure() const;
};

/// Necessary conditions for a proper degeneration a -> b:
///   der_dim      dim Der(a) < dim Der(b)
///   ann_dim      dim Ann(a) <= dim Ann(b)
///   lcs_dims     dim b^k <= dim a^k for every k
///   product_dims dim(b^k b^l) <= dim(a^k a^l) for every k, l
///   jacobi       if a satisfies the Jacobi identity then so does b
/// Throws DimensionMismatch for unequal dimensions.
ScreenReport necessary_conditions(const Algebra& a, const Algebra& b);

/// Same screen on precomputed fingerprints (the jacobi check needs the flags).
ScreenReport necessary_conditions(const InvariantFingerprint& fa, bool jacobi_a, const InvariantFingerprint& fb,
                                  bool jacobi_b);

}  // namespace dml
