#include "dml/exact/subspace.hpp"

namespace dml {

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t n) {
  Subspace s(n);
  s.basis_ = MatrixQ::identity(n);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const MatrixQ& rows) {
  if (rows.rows() > 0 && rows.cols() != ambient_dim)
    throw DimensionMismatch("spanning vectors do not live in the ambient space");
  Subspace s(ambient_dim);
  if (rows.rows() == 0) return s;
  MatrixQ m = rows;
  reduce_to_rref(m);
  s.basis_ = std::move(m);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  MatrixQ m(0, ambient_dim);
  for (const auto& v : vectors) m.append_row(v);
  return span(ambient_dim, m);
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(basis_.row_vec(i));
  return out;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
  MatrixQ m = basis_;
  m.append_row(v);
  return rank(m) == dim();
}

bool Subspace::contains(const Subspace& w) const {
  if (w.ambient_ != ambient_) throw DimensionMismatch("subspaces live in different ambient spaces");
  return (*this + w).dim() == dim();
}

Subspace operator+(const Subspace& u, const Subspace& w) {
  if (u.ambient_ != w.ambient_) throw DimensionMismatch("subspaces live in different ambient spaces");
  MatrixQ m = u.basis_;
  for (std::size_t i = 0; i < w.basis_.rows(); ++i) m.append_row(w.basis_.row(i));
  return Subspace::span(u.ambient_, m);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_ != w.ambient_) throw DimensionMismatch("subspaces live in different ambient spaces");
  const std::size_t du = u.dim();
  const std::size_t dw = w.dim();
  if (du == 0 || dw == 0) return Subspace(u.ambient_);
  // Pairs (x, y) with x U = y W; the kernel of [U; -W]^T parametrizes them.
  MatrixQ stacked(u.ambient_, du + dw);
  for (std::size_t j = 0; j < u.ambient_; ++j) {
    for (std::size_t i = 0; i < du; ++i) stacked(j, i) = u.basis_(i, j);
    for (std::size_t i = 0; i < dw; ++i) stacked(j, du + i) = -w.basis_(i, j);
  }
  const MatrixQ k = kernel(stacked);
  std::vector<Vec> vecs;
  for (std::size_t r = 0; r < k.rows(); ++r) {
    Vec v(u.ambient_, Rational(0));
    for (std::size_t i = 0; i < du; ++i)
      if (!is_zero(k(r, i)))
        for (std::size_t j = 0; j < u.ambient_; ++j) v[j] += k(r, i) * u.basis_(i, j);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(u.ambient_, vecs);
}

std::string Subspace::to_string() const {
  std::string out = "span{";
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    if (i) out += ", ";
    out += "(";
    for (std::size_t j = 0; j < ambient_; ++j) out += (j ? "," : "") + basis_(i, j).get_str();
    out += ")";
  }
  return out + "}";
}

SubspaceRelations subspace_ops(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionMismatch("subspace_ops: ambient dimensions differ");
  SubspaceRelations r;
  r.sum = u + w;
  r.intersection = intersect(u, w);
  r.equal = u == w;
  r.contains = u.contains(w);
  return r;
}

}  // namespace dml
