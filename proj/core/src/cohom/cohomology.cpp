#include "dml/cohom/cohomology.hpp"

#include "dml/error.hpp"

namespace dml {
namespace {

void require_dim(const Algebra& a, const SkewForm& f) {
  if (f.dim() != a.dim()) throw DimensionMismatch("skew form dimension differs from algebra dimension");
}

// Adds coef * theta(e_l, e_m) to a constraint row expressed on Delta coordinates.
void add_entry(Vec& row, std::size_t n, std::size_t l, std::size_t m, const Rational& coef) {
  if (l == m) return;
  if (l < m)
    row[pair_index(n, l, m)] += coef;
  else
    row[pair_index(n, m, l)] -= coef;
}

std::vector<SkewForm> rows_to_forms(std::size_t n, const MatrixQ& m) {
  std::vector<SkewForm> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(SkewForm::from_coords(n, m.row_vec(r)));
  return out;
}

}  // namespace

MatrixQ cocycle_constraints(const Algebra& a) {
  const std::size_t n = a.dim();
  MatrixQ sys(0, num_pairs(n));
  Vec row(num_pairs(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::fill(row.begin(), row.end(), Rational(0));
        for (std::size_t l = 0; l < n; ++l) {
          const Rational& c1 = a.constant(i, j, l);  // (e_i e_j) has e_l-part c1
          if (!is_zero(c1)) add_entry(row, n, l, k, c1);
          const Rational& c2 = a.constant(j, k, l);  // (e_j e_k) has e_l-part c2
          if (!is_zero(c2)) add_entry(row, n, i, l, c2);
        }
        if (!is_zero(row)) sys.append_row(row);
      }
  return sys;
}

bool is_cocycle(const Algebra& a, const SkewForm& f) {
  require_dim(a, f);
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) {
          s += a.constant(i, j, l) * f.value(l, k);
          s += a.constant(j, k, l) * f.value(i, l);
        }
        if (!is_zero(s)) return false;
      }
  return true;
}

std::vector<SkewForm> cocycle_space(const Algebra& a) {
  return rows_to_forms(a.dim(), kernel(cocycle_constraints(a)));
}

SkewForm coboundary(const Algebra& a, const Vec& f) {
  const std::size_t n = a.dim();
  if (f.size() != n) throw DimensionMismatch("functional length differs from dimension");
  SkewForm out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k) s += f[k] * a.constant(i, j, k);
      if (!is_zero(s)) out.add(i, j, s);
    }
  return out;
}

std::vector<SkewForm> coboundary_space(const Algebra& a) {
  const std::size_t n = a.dim();
  MatrixQ m(0, num_pairs(n));
  for (std::size_t k = 0; k < n; ++k) {
    const SkewForm d = coboundary(a, unit_vec(n, k));
    if (!d.is_zero()) m.append_row(d.coords());
  }
  return rows_to_forms(n, Subspace::span(num_pairs(n), m).basis());
}

CohomologyBasis h2_basis(const Algebra& a) {
  const std::size_t n = a.dim();
  CohomologyBasis out;
  out.z2 = cocycle_space(a);
  out.b2 = coboundary_space(a);

  // Pivot completion: run RREF on [b2; z2] and keep the z2 rows that raise the rank.
  MatrixQ acc(0, num_pairs(n));
  for (const auto& b : out.b2) acc.append_row(b.coords());
  std::size_t r = rank(acc);
  for (const auto& z : out.z2) {
    MatrixQ trial = acc;
    trial.append_row(z.coords());
    const std::size_t r2 = rank(trial);
    if (r2 > r) {
      acc = std::move(trial);
      r = r2;
      out.h2_reps.push_back(z);
    }
  }
  return out;
}

Vec class_coordinates(const Algebra& a, const SkewForm& f, const CohomologyBasis& basis) {
  require_dim(a, f);
  if (!is_cocycle(a, f)) throw NotACocycle("form " + f.to_string() + " is not a cocycle");
  const std::size_t h = basis.h2_reps.size();
  MatrixQ rows(0, num_pairs(a.dim()));
  for (const auto& r : basis.h2_reps) rows.append_row(r.coords());
  for (const auto& b : basis.b2) rows.append_row(b.coords());
  const auto x = solve_combination(rows, f.coords());
  if (!x) throw NotACocycle("form " + f.to_string() + " lies outside the span of the given basis");
  return Vec(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(h));
}

std::optional<Vec> coordinates_modulo_coboundaries(const Algebra& a, const SkewForm& f,
                                                   const std::vector<SkewForm>& gens) {
  require_dim(a, f);
  MatrixQ rows(0, num_pairs(a.dim()));
  for (const auto& g : gens) rows.append_row(g.coords());
  for (const auto& b : coboundary_space(a)) rows.append_row(b.coords());
  const auto x = solve_combination(rows, f.coords());
  if (!x) return std::nullopt;
  return Vec(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(gens.size()));
}

bool is_coboundary(const Algebra& a, const SkewForm& f) {
  require_dim(a, f);
  MatrixQ rows(0, num_pairs(a.dim()));
  for (const auto& b : coboundary_space(a)) rows.append_row(b.coords());
  if (rows.rows() == 0) return f.is_zero();
  return solve_combination(rows, f.coords()).has_value();
}

}  // namespace dml
