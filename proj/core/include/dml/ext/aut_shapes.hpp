#pragma once

#include "dml/exact/matrix.hpp"

#include <array>

namespace dml {

/// Free letters of the automorphism shape of D6_06 (+) C, i.e. D7_06. The 3x3 block
/// (a b c / d e f / g h k) acts on e1..e3, rows 4..6 carry its 2x2 minors.
struct Aut7Params {
  Rational a, b, c, d, e, f, g, h, k;
  Rational l, m, n, q, r, s, j, t, u;
  Rational p, i, v;
  Rational w, x, y, z;
};

/// Free letters of the automorphism shape of D8_06 = D6_06 (+) C^2.
struct Aut8Params {
  Rational a, b, c, d, e, f, g, h, k;
  Rational l, m, n, q, r, s, j, t, u;
  Rational p1, p2, i1, i2, v1, v2;
  Rational w1, x1, y1, w2, x2, y2;
  Rational z1, z2, z3, z4;
};

/// The displayed matrix; column j is the image of e_j.
MatrixQ aut7_matrix(const Aut7Params& p);
MatrixQ aut8_matrix(const Aut8Params& p);

/// Coefficients (alpha_1..alpha_4) of theta on nabla_1 = [d16]-[d25]+[d34], nabla_2 = [d17],
/// nabla_3 = [d27], nabla_4 = [d37].
using Alpha7 = std::array<Rational, 4>;
/// Coefficients on nabla_1, [d17], [d18], [d27], [d28], [d37], [d38], [d78].
using Alpha8 = std::array<Rational, 8>;

/// alpha* as printed for the 7-dimensional shape.
Alpha7 alpha_star7(const Aut7Params& p, const Alpha7& alpha);

enum class Alpha8Formulas {
  Printed,    ///< exactly as printed
  Corrected,  ///< leading sign of the alpha_5 term and y_2 in alpha_6, alpha_7
};

Alpha8 alpha_star8(const Aut8Params& p, const Alpha8& alpha, Alpha8Formulas which);

}  // namespace dml
