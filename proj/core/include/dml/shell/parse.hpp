#pragma once

#include "dml/algcore/algebra.hpp"
#include "dml/cohom/skew_form.hpp"
#include "dml/degen/parametric.hpp"

#include <string>
#include <string_view>

namespace dml {

/// Grammar (whitespace-insensitive, '#' starts a comment):
///   dim N
///   e<i> e<j> = [coef[*]]e<k> (+|-) [coef[*]]e<l> ...     coef is p or p/q
/// Unlisted products are zero; e_j e_i may be listed when consistent with skew-symmetry.
/// Throws SyntaxError, SkewConflict, IndexOutOfRange.
Algebra parse_algebra(std::string_view text);

/// Inverse of parse_algebra: "dim N" followed by the nonzero products with i < j.
std::string emit_algebra(const Algebra& a);

/// Terms [coef[*]][d<i><j>] or [coef[*]][d<i>,<j>] joined by + or -; "0" is the zero form.
/// Throws SyntaxError, IndexOutOfRange, DiagonalDelta.
SkewForm parse_cocycle(std::string_view text, std::size_t n);

/// Lines E<i> = [poly[*]]e<j> (+|-) ..., poly a monomial such as 2*t^3, -t, t^-1 or a
/// parenthesised sum of monomials. A missing E<i> line defaults to E<i> = e<i>.
/// Throws SyntaxError, IndexOutOfRange, SingularBasis.
ParametricBasis parse_parametric_basis(std::string_view text, std::size_t n);

/// Inverse of parse_parametric_basis for bases with Laurent polynomial entries.
std::string emit_parametric_basis(const ParametricBasis& b);

/// Whitespace-separated rationals, one matrix row per line. Throws SyntaxError, and
/// DimensionMismatch when the shape is not n x n (n = 0 accepts any square shape).
MatrixQ parse_matrix(std::string_view text, std::size_t n = 0);

/// Reads a whole file. Throws dml::Error when the file cannot be opened.
std::string read_file(const std::string& path);

}  // namespace dml
