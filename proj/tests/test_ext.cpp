#include "dml/algcore/structure.hpp"
#include "dml/error.hpp"
#include "dml/ext/aut_shapes.hpp"
#include "dml/ext/extension.hpp"
#include "dml/oracle/brute_force.hpp"
#include "dml/shell/parse.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace dml {
namespace {

using test::cat;

struct Nablas7 {
  Algebra a = cat("D7_06");
  std::vector<SkewForm> n{parse_cocycle("[d16]-[d25]+[d34]", 7), parse_cocycle("[d17]", 7),
                          parse_cocycle("[d27]", 7), parse_cocycle("[d37]", 7)};

  SkewForm combo(const Alpha7& al) const {
    SkewForm f(7);
    for (std::size_t i = 0; i < 4; ++i) f += al[i] * n[i];
    return f;
  }
  Vec coords(const SkewForm& f) const { return *coordinates_modulo_coboundaries(a, f, n); }
};

Aut7Params random_aut7(test::Rng& rng) {
  for (;;) {
    Aut7Params p;
    for (Rational* x : {&p.a, &p.b, &p.c, &p.d, &p.e, &p.f, &p.g, &p.h, &p.k, &p.l, &p.m, &p.n, &p.q,
                        &p.r, &p.s, &p.j, &p.t, &p.u, &p.p, &p.i, &p.v, &p.w, &p.x, &p.y})
      *x = rng.q();
    p.z = rng.nonzero();
    if (inverse(aut7_matrix(p))) return p;
  }
}

std::vector<std::vector<long>> gram_of(const SkewForm& f) {
  std::vector<std::vector<long>> g(f.dim(), std::vector<long>(f.dim()));
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = 0; j < f.dim(); ++j) g[i][j] = f.value(i, j).get_num().get_si();
  return g;
}

TEST(Radical, SpecCases) {
  const Nablas7 d;
  EXPECT_EQ(radical(d.a, CocycleTuple(7, {SkewForm(7)})), Subspace::full(7));

  const auto r2 = radical(d.a, CocycleTuple(7, {d.n[1]}));
  for (std::size_t i = 1; i <= 5; ++i) EXPECT_TRUE(r2.contains(unit_vec(7, i)));

  // theta = nabla_1 + nabla_4 pairs e3 with e4 + e7, so e4 - e7 lies in its radical.
  const SkewForm th = d.n[0] + d.n[3];
  const auto r = radical(d.a, CocycleTuple(7, {th}));
  EXPECT_EQ(r.dim(), oracle::radical_dim(gram_of(th)));
  Vec v = unit_vec(7, 3);
  v[6] = -1;
  EXPECT_EQ(intersect(r, annihilator(d.a)), Subspace::span(7, std::vector<Vec>{v}));
}

TEST(ExtensionConditions, SpecCases) {
  const Nablas7 d;
  const auto pair = check_extension_conditions(d.a, CocycleTuple(7, {d.n[0], d.n[3]}));
  EXPECT_TRUE(pair.satisfied());
  EXPECT_TRUE(pair.radical_and_ann.is_zero());

  const auto twice = check_extension_conditions(d.a, CocycleTuple(7, {d.n[0], d.n[0]}));
  EXPECT_FALSE(twice.classes_independent_in_h2);
  EXPECT_FALSE(twice.satisfied());

  const auto lone = check_extension_conditions(d.a, CocycleTuple(7, {d.n[1]}));
  EXPECT_TRUE(lone.radical_meets_ann);
  EXPECT_TRUE(lone.radical_and_ann.contains(unit_vec(7, 3)));
  EXPECT_FALSE(lone.satisfied());

  EXPECT_THROW(check_extension_conditions(d.a, CocycleTuple(7, {parse_cocycle("[d14]", 7)})), NotACocycle);
}

TEST(CentralExtension, ReconstructsPrintedTables) {
  const Nablas7 d;
  EXPECT_EQ(central_extension(d.a, CocycleTuple(7, {d.n[0] + d.n[3]})), cat("D8_36"));

  const Algebra d806 = cat("D8_06");
  const SkewForm th8 = parse_cocycle("[d16]-[d25]+[d34]+[d78]", 8);
  EXPECT_EQ(central_extension(d806, CocycleTuple(8, {th8})), cat("D9_38"));

  const Algebra built = central_extension(d.a, CocycleTuple(7, {d.n[0], d.n[3]}));
  EXPECT_NE(built, cat("D9_37"));
  MatrixQ flip = MatrixQ::identity(9);
  flip(8, 8) = -1;
  EXPECT_EQ(apply_basis_change(built, flip), cat("D9_37"));

  EXPECT_EQ(central_extension(d.a, CocycleTuple(7, {SkewForm(7), SkewForm(7)})), direct_sum_with_trivial(d.a, 2));
  EXPECT_THROW(central_extension(d.a, CocycleTuple(7, {parse_cocycle("[d14]", 7)})), NotACocycle);
}

TEST(CentralExtension, AnnihilatorFormulaAndNilpotency) {
  test::Rng rng(47);
  for (const char* id : {"D5_01", "D6_04", "D7_06", "D7_07", "D7_12"}) {
    const Algebra a = cat(id);
    const auto z2 = cocycle_space(a);
    for (std::size_t s = 1; s <= 2; ++s) {
      std::vector<SkewForm> comps;
      for (std::size_t c = 0; c < s; ++c) {
        SkewForm f(a.dim());
        for (const auto& z : z2) f += rng.q() * z;
        comps.push_back(f);
      }
      const CocycleTuple t(a.dim(), comps);
      const Algebra ext = central_extension(a, t);
      const auto cond = check_extension_conditions(a, t);
      EXPECT_EQ(annihilator(ext).dim(), cond.radical_and_ann.dim() + s) << id;
      EXPECT_TRUE(is_nilpotent(ext)) << id;
    }
  }
}

TEST(CentralExtension, DependentClassesSplit) {
  // With theta_2 = theta_1 + coboundary, e_{n+1} - e_{n+2} shifted by a preimage is central
  // and avoids A^2 + V, exhibiting an annihilator component.
  const Nablas7 d;
  const SkewForm th = d.n[0] + d.n[3];
  const Vec fn = unit_vec(7, 3);
  const CocycleTuple t(7, {th, th + coboundary(d.a, fn)});
  const Algebra ext = central_extension(d.a, t);
  Vec z = zero_vec(9);
  z[7] = 1;
  z[8] = -1;
  // x = e8 - e9 satisfies x in Ann; the product e1 e2 = e4 + e8 + e9 shows e4 is hit, so
  // span(e8 - e9) meets Ann(A_theta) but not A_theta^2 + <e9>.
  EXPECT_TRUE(annihilator(ext).contains(z));
  const Subspace full = Subspace::full(9);
  const Subspace sq = subspace_product(ext, full, full);
  EXPECT_FALSE(sq.contains(z));
  EXPECT_FALSE(check_extension_conditions(d.a, t).classes_independent_in_h2);
}

TEST(Automorphism, SpecCases) {
  const Nablas7 d;
  EXPECT_TRUE(verify_automorphism(d.a, MatrixQ::identity(7)));

  Aut7Params p;
  p.a = p.e = p.k = 1;
  p.z = 1;
  EXPECT_TRUE(verify_automorphism(d.a, aut7_matrix(p)));
  p.z = 0;
  EXPECT_FALSE(verify_automorphism(d.a, aut7_matrix(p)));

  MatrixQ swap = MatrixQ::identity(7);
  swap(0, 0) = swap(3, 3) = 0;
  swap(0, 3) = swap(3, 0) = 1;
  EXPECT_FALSE(verify_automorphism(d.a, swap));
  EXPECT_FALSE(verify_automorphism(d.a, parse_matrix(test::read_data("matrices/d706_swap_e1_e4.txt"), 7)));
  EXPECT_TRUE(verify_automorphism(d.a, parse_matrix(test::read_data("matrices/d706_scaling.txt"), 7)));
}

TEST(Act, IdentityAndScaling) {
  const Nablas7 d;
  const CocycleTuple t(7, {d.n[0], d.n[2]});
  EXPECT_EQ(act(d.a, MatrixQ::identity(7), t), t);

  const Rational lambda(2), mu(5), a1(3);
  Aut7Params p;
  p.a = p.e = p.k = lambda;
  p.z = mu;
  const MatrixQ phi = aut7_matrix(p);
  const auto u = act(d.a, phi, CocycleTuple(7, {a1 * d.n[0]}));
  EXPECT_EQ(u.components[0], Rational(lambda * lambda * lambda * a1) * d.n[0]);
  EXPECT_EQ(alpha_star7(p, {a1, 0, 0, 0})[0], Rational(lambda * lambda * lambda * a1));

  MatrixQ bad = MatrixQ::identity(7);
  bad(0, 3) = 1;
  EXPECT_THROW(act(d.a, bad, t), NotAnAutomorphism);
}

TEST(Act, RandomAutomorphismsPreserveStructure) {
  const Nablas7 d;
  test::Rng rng(53);
  const auto basis = h2_basis(d.a);
  for (int k = 0; k < 40; ++k) {
    const Aut7Params p1 = random_aut7(rng), p2 = random_aut7(rng);
    const MatrixQ phi = aut7_matrix(p1), psi = aut7_matrix(p2);
    ASSERT_TRUE(verify_automorphism(d.a, phi));

    const Alpha7 al{rng.q(), rng.q(), rng.q(), rng.q()};
    const CocycleTuple t(7, {d.combo(al), d.combo({rng.q(), rng.q(), rng.q(), rng.q()})});
    const auto u = act(d.a, phi, t);
    for (const auto& c : u.components) EXPECT_TRUE(is_cocycle(d.a, c));

    // Functoriality under the phi^T B phi convention.
    EXPECT_EQ(act(d.a, phi * psi, t), act(d.a, psi, act(d.a, phi, t)));

    // Spans move together: rescaled and coboundary-shifted tuples stay equivalent.
    CocycleTuple t2 = t;
    t2.components[0] = Rational(5) * t2.components[0] + coboundary(d.a, unit_vec(7, 4));
    EXPECT_TRUE(same_h2_span(d.a, act(d.a, phi, t), act(d.a, phi, t2)));
    EXPECT_EQ(h2_span(d.a, u, basis).dim(), h2_span(d.a, t, basis).dim());

    // The closed-form alpha* agrees with the action on nabla coordinates.
    const auto star = alpha_star7(p1, al);
    EXPECT_EQ(d.coords(act_unchecked(phi, CocycleTuple(7, {d.combo(al)})).components[0]),
              (Vec{star[0], star[1], star[2], star[3]}));
  }
}

TEST(Act, ReductionRecipeLandsInNabla1PlusNabla4) {
  const Nablas7 d;
  test::Rng rng(59);
  const CocycleTuple target(7, {d.n[0] + d.n[3]});
  std::vector<Alpha7> samples{{2, 3, 5, 7}};
  while (samples.size() < 11) samples.push_back({rng.nonzero(), rng.q(), rng.q(), rng.nonzero()});
  for (const auto& al : samples) {
    Aut7Params p;
    p.d = p.h = p.a = p.e = p.k = 1;
    p.v = Rational(1 - al[1] / al[3]);
    p.i = Rational(1 + al[2] / al[3]);
    p.z = Rational(al[0] / al[3]);
    p.c = Rational(-1 + 1 / al[0]);
    const MatrixQ phi = aut7_matrix(p);
    ASSERT_TRUE(verify_automorphism(d.a, phi));
    EXPECT_TRUE(same_h2_span(d.a, act(d.a, phi, CocycleTuple(7, {d.combo(al)})), target));
  }
}

TEST(SameSpan, SpecCases) {
  const Nablas7 d;
  const CocycleTuple t(7, {d.n[0] + d.n[3], d.n[1]});
  CocycleTuple scaled = t;
  for (auto& c : scaled.components) c = Rational(5) * c;
  EXPECT_TRUE(same_h2_span(d.a, t, scaled));
  CocycleTuple shifted = t;
  shifted.components[0] += coboundary(d.a, unit_vec(7, 5));
  shifted.components[1] += coboundary(d.a, unit_vec(7, 3));
  EXPECT_TRUE(same_h2_span(d.a, t, shifted));
  EXPECT_FALSE(same_h2_span(d.a, CocycleTuple(7, {d.n[0] + d.n[3]}), CocycleTuple(7, {d.n[0]})));
}

}  // namespace
}  // namespace dml
