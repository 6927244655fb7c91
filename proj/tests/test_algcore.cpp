#include "dml/algcore/identities.hpp"
#include "dml/algcore/structure.hpp"
#include "dml/error.hpp"
#include "dml/oracle/brute_force.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace dml {
namespace {

using test::cat;

Vec e(std::size_t n, std::size_t i) { return unit_vec(n, i - 1); }

Subspace span_of(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vec> v;
  for (auto i : idx) v.push_back(e(n, i));
  return Subspace::span(n, v);
}

std::vector<std::size_t> dims(const std::vector<Subspace>& s) {
  std::vector<std::size_t> out;
  for (const auto& x : s) out.push_back(x.dim());
  return out;
}

Vec random_vec(test::Rng& rng, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = rng.q();
  return v;
}

TEST(Algebra, ProductsFromTables) {
  const Algebra d606 = cat("D6_06");
  EXPECT_EQ(d606.basis_product(0, 1), e(6, 4));
  const Algebra d714 = cat("D7_14");
  Vec minus_e7 = e(7, 7);
  minus_e7[6] = -1;
  EXPECT_EQ(d714.basis_product(1, 4), minus_e7);
  test::Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    const Vec x = random_vec(rng, 7);
    EXPECT_TRUE(is_zero(d714.product(x, x)));
  }
}

TEST(Algebra, SkewConflictsRejected) {
  EXPECT_THROW(Algebra::from_products(2, {{0, 0, 1, Rational(1)}}), SkewConflict);
  EXPECT_THROW(Algebra::from_products(2, {{0, 2, 1, Rational(1)}}), IndexOutOfRange);
  std::vector<Rational> sc(8, Rational(0));
  sc[(0 * 2 + 1) * 2 + 0] = 1;  // e1 e2 = e1 without the partner entry
  EXPECT_THROW(Algebra::from_tensor(2, sc), SkewConflict);
}

TEST(Identities, SpecCases) {
  const auto r606 = check_identities(cat("D6_06"));
  EXPECT_TRUE(r606.dual_mock_lie);
  EXPECT_TRUE(r606.jacobi);

  const auto r714 = check_identities(cat("D7_14"));
  EXPECT_TRUE(r714.dual_mock_lie);
  EXPECT_FALSE(r714.jacobi);
  const Algebra a = cat("D7_14");
  Vec expected = zero_vec(7);
  expected[6] = -3;
  EXPECT_EQ(jacobi_sum(a, e(7, 1), e(7, 2), e(7, 3)), expected);

  const auto zero = check_identities(Algebra(5));
  EXPECT_TRUE(zero.anticommutative && zero.antiassociative && zero.jacobi && zero.dual_mock_lie);
  EXPECT_TRUE(zero.witnesses.empty());
}

TEST(Identities, CatalogWideFlags) {
  const auto& c = Catalog::builtin();
  for (const auto& id : c.all_ids()) {
    const auto entry = c.get(id);
    const auto r = check_identities(entry.algebra);
    EXPECT_TRUE(r.dual_mock_lie) << id;
    EXPECT_EQ(r.jacobi, entry.is_lie) << id;
  }
}

TEST(Identities, TwoEngelOnRandomVectors) {
  test::Rng rng(5);
  for (const auto& entry : Catalog::builtin().base_entries()) {
    const Algebra& a = entry.algebra;
    for (int k = 0; k < 25; ++k) {
      const Vec x = random_vec(rng, a.dim()), y = random_vec(rng, a.dim());
      EXPECT_TRUE(is_zero(a.product(a.product(x, y), y))) << entry.id;
    }
  }
}

TEST(Identities, TwoStepNilpotentSatisfiesBoth) {
  for (const auto& entry : Catalog::builtin().base_entries()) {
    const Algebra& a = entry.algebra;
    const Subspace full = Subspace::full(a.dim());
    const Subspace sq = subspace_product(a, full, full);
    if (!subspace_product(a, full, sq).is_zero()) continue;
    const auto r = check_identities(a);
    EXPECT_TRUE(r.antiassociative && r.jacobi) << entry.id;
  }
}

TEST(Structure, AnnihilatorMatchesSpecAndOracle) {
  EXPECT_EQ(annihilator(cat("D7_07")), span_of(7, {7}));
  EXPECT_EQ(annihilator(cat("D6_06")), span_of(6, {4, 5, 6}));
  EXPECT_EQ(annihilator(Algebra(4)), Subspace::full(4));
  for (const auto& entry : Catalog::builtin().base_entries())
    EXPECT_EQ(annihilator(entry.algebra).dim(), oracle::annihilator_dim(entry.algebra)) << entry.id;
}

TEST(Structure, LowerCentralSeries) {
  EXPECT_EQ(dims(lower_central_series(cat("D7_14"))), (std::vector<std::size_t>{7, 4, 1, 0}));
  EXPECT_EQ(dims(lower_central_series(cat("D7_07"))), (std::vector<std::size_t>{7, 1, 0}));
  EXPECT_EQ(dims(lower_central_series(Algebra(5))), (std::vector<std::size_t>{5, 0}));
  for (const auto& entry : Catalog::builtin().base_entries()) EXPECT_TRUE(is_nilpotent(entry.algebra)) << entry.id;
}

TEST(Structure, SubspaceProducts) {
  for (const auto& entry : Catalog::builtin().base_entries()) {
    const Subspace ann = annihilator(entry.algebra);
    EXPECT_TRUE(subspace_product(entry.algebra, ann, ann).is_zero());
  }
  const Algebra d714 = cat("D7_14");
  const auto lcs = lower_central_series(d714);
  EXPECT_TRUE(subspace_product(d714, lcs[1], lcs[1]).is_zero());
  const Algebra d836 = cat("D8_36");
  const Subspace full = Subspace::full(8);
  EXPECT_EQ(subspace_product(d836, full, subspace_product(d836, full, full)), span_of(8, {8}));
}

TEST(Structure, DerivationsAgainstOracle) {
  EXPECT_EQ(derivation_algebra(Algebra(4)).dim, 16u);
  EXPECT_EQ(derivation_algebra(cat("D7_14")).dim, 21u);
  const std::size_t d707 = oracle::derivation_dim(cat("D7_07"));
  EXPECT_GT(d707, 21u);
  EXPECT_EQ(derivation_algebra(cat("D7_07")).dim, d707);
  for (const auto& id : Catalog::builtin().ids_of_dim(7)) {
    const Algebra a = cat(id);
    const auto der = derivation_algebra(a);
    EXPECT_EQ(der.dim, oracle::derivation_dim(a)) << id;
    for (const auto& d : der.basis) EXPECT_TRUE(is_derivation(a, d)) << id;
  }
}

TEST(Structure, ScalingIsNotADerivationOfNonzeroAlgebra) {
  EXPECT_FALSE(is_derivation(cat("D5_01"), MatrixQ::identity(5)));
  EXPECT_TRUE(is_derivation(Algebra(5), MatrixQ::identity(5)));
}

TEST(BasisChange, IdentityScalingAndSignFlip) {
  const Algebra a = cat("D7_14");
  EXPECT_EQ(apply_basis_change(a, MatrixQ::identity(7)), a);

  const Rational lambda(3);
  const Algebra scaled = apply_basis_change(a, lambda * MatrixQ::identity(7));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j)
      for (std::size_t k = 0; k < 7; ++k) EXPECT_EQ(scaled.constant(i, j, k), lambda * a.constant(i, j, k));

  MatrixQ flip = MatrixQ::identity(9);
  flip(8, 8) = -1;
  const Algebra d937 = cat("D9_37");
  const Algebra flipped = apply_basis_change(d937, flip);
  EXPECT_EQ(flipped.constant(2, 6, 8), Rational(-d937.constant(2, 6, 8)));
  EXPECT_EQ(apply_basis_change(flipped, flip), d937);

  MatrixQ singular(7, 7);
  EXPECT_THROW(apply_basis_change(a, singular), SingularMatrix);
}

TEST(BasisChange, FingerprintIsInvariant) {
  test::Rng rng(31);
  const std::vector<std::string> ids{"D5_02", "D6_05", "D7_07", "D7_12", "D7_14"};
  for (int k = 0; k < 50; ++k) {
    const Algebra a = cat(ids[k % ids.size()]);
    const MatrixQ p = rng.invertible(a.dim());
    const Algebra b = apply_basis_change(a, p);
    EXPECT_EQ(fingerprint(b), fingerprint(a));
    EXPECT_TRUE(verify_isomorphism(a, b, p));
  }
}

TEST(DirectSum, SplitEntries) {
  EXPECT_EQ(direct_sum_with_trivial(cat("D6_06"), 1), cat("D7_06"));
  EXPECT_EQ(direct_sum_with_trivial(cat("D7_14"), 0), cat("D7_14"));
  EXPECT_EQ(direct_sum_with_trivial(cat("D7_14"), 1), cat("D8_14"));
  EXPECT_EQ(direct_sum_with_trivial(cat("D6_06"), 2), cat("D8_06"));
}

TEST(Fingerprint, SpecCases) {
  const auto z = fingerprint(Algebra(7));
  EXPECT_EQ(z.der_dim, 49u);
  EXPECT_EQ(z.ann_dim, 7u);
  EXPECT_EQ(z.lcs_dims, (std::vector<std::size_t>{7, 0}));
  for (const auto& [kl, d] : z.product_dims) EXPECT_EQ(d, 0u);

  const auto f714 = fingerprint(cat("D7_14"));
  EXPECT_EQ(f714.der_dim, 21u);
  EXPECT_EQ(f714.ann_dim, 1u);
  EXPECT_EQ(f714.lcs_dims, (std::vector<std::size_t>{7, 4, 1, 0}));

  EXPECT_EQ(fingerprint(cat("D7_06")).ann_dim, 4u);
}

}  // namespace
}  // namespace dml
