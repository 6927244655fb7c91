#pragma once

#include "dml/exact/linalg.hpp"

#include <string>

namespace dml {

/// Subspace of Q^n stored by its reduced row-echelon basis. The RREF is unique, so two
/// subspaces are equal exactly when their basis matrices are identical.
class Subspace {
 public:
  /// The zero subspace of Q^n.
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace full(std::size_t n);
  /// Span of the rows of `rows` (any spanning set).
  static Subspace span(std::size_t ambient_dim, const MatrixQ& rows);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return basis_.rows() == 0; }
  const MatrixQ& basis() const noexcept { return basis_; }
  std::vector<Vec> basis_vectors() const;

  bool contains(const Vec& v) const;
  /// True iff w is a subspace of *this.
  bool contains(const Subspace& w) const;

  friend Subspace operator+(const Subspace& u, const Subspace& w);
  friend Subspace intersect(const Subspace& u, const Subspace& w);
  friend bool operator==(const Subspace& u, const Subspace& w) {
    return u.ambient_ == w.ambient_ && u.basis_ == w.basis_;
  }

  std::string to_string() const;

 private:
  std::size_t ambient_;
  MatrixQ basis_;
};

/// All four subspace relations at once.
struct SubspaceRelations {
  Subspace sum;
  Subspace intersection;
  bool equal = false;
  bool contains = false;  ///< w is contained in u
};

SubspaceRelations subspace_ops(const Subspace& u, const Subspace& w);

}  // namespace dml
