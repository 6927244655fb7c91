#include "dml/algcore/identities.hpp"

namespace dml {
namespace {

Vec right_times_basis(const Algebra& a, const Vec& x, std::size_t k) {
  return a.product(x, unit_vec(a.dim(), k));
}

Vec basis_times(const Algebra& a, std::size_t i, const Vec& y) { return a.product(unit_vec(a.dim(), i), y); }

}  // namespace

IdentityReport check_identities(const Algebra& a) {
  IdentityReport rep;
  const std::size_t n = a.dim();

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec lhs = a.basis_product(i, j);
      Vec rhs = a.basis_product(j, i);
      for (auto& x : rhs) x = -x;
      if (lhs != rhs) {
        rep.anticommutative = false;
        rep.witnesses.push_back({IdentityKind::Anticommutativity, {i, j, j}, lhs, rhs});
      }
    }

  // Products of two basis vectors are reused n times each.
  std::vector<Vec> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = a.basis_product(i, j);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec left = right_times_basis(a, prod[i * n + j], k);   // (e_i e_j) e_k
        Vec right = basis_times(a, i, prod[j * n + k]);        // e_i (e_j e_k)
        for (auto& x : right) x = -x;
        if (left != right) {
          rep.antiassociative = false;
          rep.witnesses.push_back({IdentityKind::Antiassociativity, {i, j, k}, left, right});
        }
      }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec s = jacobi_sum(a, unit_vec(n, i), unit_vec(n, j), unit_vec(n, k));
        if (!is_zero(s)) {
          rep.jacobi = false;
          rep.witnesses.push_back({IdentityKind::Jacobi, {i, j, k}, s, zero_vec(n)});
        }
      }

  rep.dual_mock_lie = rep.anticommutative && rep.antiassociative;
  return rep;
}

Vec jacobi_sum(const Algebra& a, const Vec& x, const Vec& y, const Vec& z) {
  Vec s = a.product(a.product(x, y), z);
  const Vec t1 = a.product(a.product(y, z), x);
  const Vec t2 = a.product(a.product(z, x), y);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += t1[i] + t2[i];
  return s;
}

std::string to_string(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::Anticommutativity: return "anticommutativity";
    case IdentityKind::Antiassociativity: return "antiassociativity";
    case IdentityKind::Jacobi: return "jacobi";
  }
  return "?";
}

}  // namespace dml
