#include "dml/ext/aut_shapes.hpp"

namespace dml {
namespace {

// Fills rows 0..5 shared by both shapes: the 3x3 block, the l..u columns, and the minors.
template <class P>
void fill_common(MatrixQ& m, const P& x) {
  const Rational blk[3][3] = {{x.a, x.b, x.c}, {x.d, x.e, x.f}, {x.g, x.h, x.k}};
  const Rational low[3][3] = {{x.l, x.m, x.n}, {x.q, x.r, x.s}, {x.j, x.t, x.u}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      m(r, c) = blk[r][c];
      m(3 + r, c) = low[r][c];
    }
  m(3, 3) = x.a * x.e - x.d * x.b;
  m(3, 4) = x.a * x.f - x.d * x.c;
  m(3, 5) = x.b * x.f - x.e * x.c;
  m(4, 3) = x.a * x.h - x.g * x.b;
  m(4, 4) = x.a * x.k - x.g * x.c;
  m(4, 5) = x.b * x.k - x.h * x.c;
  m(5, 3) = x.d * x.h - x.g * x.e;
  m(5, 4) = x.d * x.k - x.g * x.f;
  m(5, 5) = x.e * x.k - x.h * x.f;
}

template <class P>
Rational block_det(const P& x) {
  return -(x.c * x.e * x.g - x.b * x.f * x.g - x.c * x.d * x.h + x.a * x.f * x.h + x.b * x.d * x.k -
           x.a * x.e * x.k);
}

}  // namespace

MatrixQ aut7_matrix(const Aut7Params& x) {
  MatrixQ m(7, 7);
  fill_common(m, x);
  m(3, 6) = x.p;
  m(4, 6) = x.i;
  m(5, 6) = x.v;
  m(6, 0) = x.w;
  m(6, 1) = x.x;
  m(6, 2) = x.y;
  m(6, 6) = x.z;
  return m;
}

MatrixQ aut8_matrix(const Aut8Params& x) {
  MatrixQ m(8, 8);
  fill_common(m, x);
  m(3, 6) = x.p1;
  m(3, 7) = x.p2;
  m(4, 6) = x.i1;
  m(4, 7) = x.i2;
  m(5, 6) = x.v1;
  m(5, 7) = x.v2;
  m(6, 0) = x.w1;
  m(6, 1) = x.x1;
  m(6, 2) = x.y1;
  m(7, 0) = x.w2;
  m(7, 1) = x.x2;
  m(7, 2) = x.y2;
  m(6, 6) = x.z1;
  m(6, 7) = x.z2;
  m(7, 6) = x.z3;
  m(7, 7) = x.z4;
  return m;
}

Alpha7 alpha_star7(const Aut7Params& x, const Alpha7& al) {
  const auto& [a1, a2, a3, a4] = al;
  return {
      block_det(x) * a1,
      (-x.d * x.i + x.g * x.p + x.a * x.v) * a1 + x.a * x.z * a2 + x.d * x.z * a3 + x.g * x.z * a4,
      (-x.e * x.i + x.h * x.p + x.b * x.v) * a1 + x.b * x.z * a2 + x.e * x.z * a3 + x.h * x.z * a4,
      (-x.f * x.i + x.k * x.p + x.c * x.v) * a1 + x.c * x.z * a2 + x.f * x.z * a3 + x.k * x.z * a4,
  };
}

Alpha8 alpha_star8(const Aut8Params& x, const Alpha8& al, Alpha8Formulas which) {
  const auto& [a1, a2, a3, a4, a5, a6, a7, a8] = al;
  const bool printed = which == Alpha8Formulas::Printed;
  // Row sums of the first three columns against the 7th and 8th coordinates.
  const Rational u1 = x.a * a2 + x.d * a4 + x.g * a6 - x.w2 * a8;
  const Rational u2 = x.a * a3 + x.d * a5 + x.g * a7 + x.w1 * a8;
  const Rational v1 = x.b * a2 + x.e * a4 + x.h * a6 - x.x2 * a8;
  const Rational v2 = x.b * a3 + x.e * a5 + x.h * a7 + x.x1 * a8;
  const Rational& y_first = printed ? x.y1 : x.y2;
  const Rational w1 = x.c * a2 + x.f * a4 + x.k * a6 - y_first * a8;
  const Rational w2 = x.c * a3 + x.f * a5 + x.k * a7 + x.y1 * a8;
  Rational ei2 = x.e * x.i2;
  if (!printed) ei2 = -ei2;
  return {
      block_det(x) * a1,
      (-x.d * x.i1 + x.g * x.p1 + x.a * x.v1) * a1 + u1 * x.z1 + u2 * x.z3,
      (-x.d * x.i2 + x.g * x.p2 + x.a * x.v2) * a1 + u1 * x.z2 + u2 * x.z4,
      (-x.e * x.i1 + x.h * x.p1 + x.b * x.v1) * a1 + v1 * x.z1 + v2 * x.z3,
      (ei2 + x.h * x.p2 + x.b * x.v2) * a1 + v1 * x.z2 + v2 * x.z4,
      (-x.f * x.i1 + x.k * x.p1 + x.c * x.v1) * a1 + w1 * x.z1 + w2 * x.z3,
      (-x.f * x.i2 + x.k * x.p2 + x.c * x.v2) * a1 + w1 * x.z2 + w2 * x.z4,
      (-x.z2 * x.z3 + x.z1 * x.z4) * a8,
  };
}

}  // namespace dml
