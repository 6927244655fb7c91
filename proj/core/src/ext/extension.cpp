#include "dml/ext/extension.hpp"

#include "dml/algcore/structure.hpp"
#include "dml/error.hpp"

namespace dml {
namespace {

void require_dims(const Algebra& a, const CocycleTuple& t) {
  if (t.algebra_dim != a.dim()) throw DimensionMismatch("cocycle tuple dimension differs from algebra dimension");
}

void require_cocycles(const Algebra& a, const CocycleTuple& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!is_cocycle(a, t.components[i]))
      throw NotACocycle("component " + std::to_string(i + 1) + " (" + t.components[i].to_string() +
                        ") is not a cocycle");
}

}  // namespace

CocycleTuple::CocycleTuple(std::size_t n, std::vector<SkewForm> comps)
    : algebra_dim(n), components(std::move(comps)) {
  for (const auto& c : components)
    if (c.dim() != n) throw DimensionMismatch("tuple component has the wrong dimension");
}

Subspace radical(const Algebra& a, const CocycleTuple& t) {
  require_dims(a, t);
  const std::size_t n = a.dim();
  MatrixQ stacked(0, n);
  for (const auto& c : t.components) {
    const MatrixQ g = c.gram();
    for (std::size_t r = 0; r < n; ++r) stacked.append_row(g.row(r));
  }
  if (stacked.rows() == 0) return Subspace::full(n);
  return Subspace::span(n, kernel(stacked));
}

ExtensionConditions check_extension_conditions(const Algebra& a, const CocycleTuple& t) {
  require_dims(a, t);
  require_cocycles(a, t);
  ExtensionConditions out;
  out.radical = radical(a, t);
  out.radical_and_ann = intersect(out.radical, annihilator(a));
  out.radical_meets_ann = !out.radical_and_ann.is_zero();
  const CohomologyBasis basis = h2_basis(a);
  out.classes_independent_in_h2 = h2_span(a, t, basis).dim() == t.size();
  return out;
}

Algebra central_extension(const Algebra& a, const CocycleTuple& t) {
  require_dims(a, t);
  require_cocycles(a, t);
  const std::size_t n = a.dim();
  const std::size_t s = t.size();
  std::vector<ProductTerm> terms = a.nonzero_products();
  for (std::size_t c = 0; c < s; ++c)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Rational v = t.components[c].value(i, j);
        if (!is_zero(v)) terms.push_back({i, j, n + c, v});
      }
  return Algebra::from_products(n + s, terms);
}

bool verify_automorphism(const Algebra& a, const MatrixQ& phi) {
  if (phi.rows() != a.dim() || phi.cols() != a.dim()) return false;
  return verify_isomorphism(a, a, phi);
}

CocycleTuple act_unchecked(const MatrixQ& phi, const CocycleTuple& t) {
  const MatrixQ phit = phi.transpose();
  CocycleTuple out;
  out.algebra_dim = t.algebra_dim;
  for (const auto& c : t.components) out.components.push_back(SkewForm::from_gram(phit * c.gram() * phi));
  return out;
}

CocycleTuple act(const Algebra& a, const MatrixQ& phi, const CocycleTuple& t) {
  require_dims(a, t);
  if (!verify_automorphism(a, phi)) throw NotAnAutomorphism("matrix is not an automorphism of the algebra");
  return act_unchecked(phi, t);
}

Subspace h2_span(const Algebra& a, const CocycleTuple& t, const CohomologyBasis& basis) {
  require_dims(a, t);
  std::vector<Vec> coords;
  for (const auto& c : t.components) coords.push_back(class_coordinates(a, c, basis));
  return Subspace::span(basis.h2_reps.size(), coords);
}

bool same_h2_span(const Algebra& a, const CocycleTuple& t1, const CocycleTuple& t2) {
  const CohomologyBasis basis = h2_basis(a);
  return h2_span(a, t1, basis) == h2_span(a, t2, basis);
}

}  // namespace dml
