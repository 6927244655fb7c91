#include "dml/degen/parametric.hpp"

#include "dml/error.hpp"

namespace dml {

ParametricBasis::ParametricBasis(MatrixT rows) : rows_(std::move(rows)) {
  if (rows_.rows() != rows_.cols()) throw DimensionMismatch("parametric basis must be square");
  if (dml::determinant(rows_).is_zero()) throw SingularBasis("parametric basis is singular for every t");
}

MatrixQ ParametricBasis::at(const Rational& t0) const {
  const std::size_t n = dim();
  MatrixQ p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(j, i) = rows_(i, j).eval(t0);
  return p;
}

ParametricConstants parametric_constants(const Algebra& a, const ParametricBasis& b) {
  const std::size_t n = a.dim();
  if (b.dim() != n) throw DimensionMismatch("parametric basis dimension differs from algebra dimension");
  const auto inv = inverse(b.rows());
  if (!inv) throw SingularBasis("parametric basis is singular for every t");
  const MatrixT& r = b.rows();

  ParametricConstants out;
  out.n = n;
  out.c.assign(n * n * n, RatFunc(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // v = E_i E_j in source coordinates.
      std::vector<RatFunc> v(n, RatFunc(0));
      for (std::size_t p = 0; p < n; ++p) {
        if (r(i, p).is_zero()) continue;
        for (std::size_t q = 0; q < n; ++q) {
          if (p == q || r(j, q).is_zero()) continue;
          const RatFunc w = r(i, p) * r(j, q);
          for (std::size_t k = 0; k < n; ++k) {
            const Rational& c = a.constant(p, q, k);
            if (!is_zero(c)) v[k] += w * RatFunc(c);
          }
        }
      }
      // Coordinates x with x * R = v, so x = v * R^{-1}.
      for (std::size_t k = 0; k < n; ++k) {
        RatFunc x(0);
        for (std::size_t l = 0; l < n; ++l)
          if (!v[l].is_zero() && !(*inv)(l, k).is_zero()) x += v[l] * (*inv)(l, k);
        out.c[(i * n + j) * n + k] = x;
        out.c[(j * n + i) * n + k] = -x;
      }
    }
  return out;
}

Algebra limit_algebra(const Algebra& a, const ParametricBasis& b) {
  const ParametricConstants pc = parametric_constants(a, b);
  const std::size_t n = pc.n;
  std::vector<ProductTerm> terms;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational v;
        try {
          v = limit_at_zero(pc.at(i, j, k));
        } catch (const PoleAtZero&) {
          throw PoleAtZero("structure constant c^" + std::to_string(k + 1) + "_{" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + "}(t) = " + pc.at(i, j, k).to_string() + " has a pole at t = 0");
        }
        if (!is_zero(v)) terms.push_back({i, j, k, v});
      }
  return Algebra::from_products(n, terms);
}

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Verified: return "VERIFIED";
    case ClaimStatus::VerifiedViaIsomorphism: return "VERIFIED-VIA-ISOMORPHISM";
    case ClaimStatus::VerifiedUpToFingerprint: return "VERIFIED-UP-TO-FINGERPRINT";
    case ClaimStatus::Unwitnessed: return "UNWITNESSED";
    case ClaimStatus::Failed: return "FAILED";
  }
  return "?";
}

bool is_verified(ClaimStatus s) { return s == ClaimStatus::Verified || s == ClaimStatus::VerifiedViaIsomorphism; }

ClaimReport verify_claim(const Algebra& source, const Algebra& target, const DegenerationClaim& c) {
  ClaimReport rep;
  if (source.dim() != target.dim()) throw DimensionMismatch("source and target dimensions differ");
  if (!c.basis) {
    rep.status = ClaimStatus::Unwitnessed;
    rep.detail = "no parametric basis recorded";
    return rep;
  }
  try {
    rep.limit = limit_algebra(source, *c.basis);
  } catch (const Error& e) {
    rep.status = ClaimStatus::Failed;
    rep.detail = e.what();
    return rep;
  }
  rep.literal = *rep.limit == target;
  if (rep.literal) {
    rep.status = ClaimStatus::Verified;
    return rep;
  }
  if (c.target_iso && verify_isomorphism(*rep.limit, target, *c.target_iso)) {
    rep.via_isomorphism = true;
    rep.status = ClaimStatus::VerifiedViaIsomorphism;
    return rep;
  }
  rep.fingerprint_equal = fingerprint(*rep.limit) == fingerprint(target);
  rep.status = rep.fingerprint_equal ? ClaimStatus::VerifiedUpToFingerprint : ClaimStatus::Failed;
  rep.detail = rep.fingerprint_equal ? "limit matches the target's invariants but no isomorphism is recorded"
                                     : "limit algebra differs from the target";
  return rep;
}

}  // namespace dml
