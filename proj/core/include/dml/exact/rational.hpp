#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace dml {

/// Exact rational number. GMP keeps the value canonical (reduced, positive denominator)
/// after every arithmetic operation.
using Rational = mpq_class;

/// Dense vector of rationals; coordinates on a fixed basis.
using Vec = std::vector<Rational>;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Parses "p" or "p/q" with an optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

bool is_zero(const Vec& v);

Vec zero_vec(std::size_t n);

/// Unit vector e_i (0-based index).
Vec unit_vec(std::size_t n, std::size_t i);

}  // namespace dml
