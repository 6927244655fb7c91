#pragma once

#include "dml/exact/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace dml {

/// Laurent polynomial in one variable t with rational coefficients.
/// Only nonzero coefficients are stored; the empty map is the zero polynomial.
class TPoly {
 public:
  TPoly() = default;
  TPoly(const Rational& c);  // NOLINT(google-explicit-constructor): constants promote freely
  TPoly(int c) : TPoly(Rational(c)) {}  // NOLINT

  static TPoly monomial(const Rational& c, int exponent);
  static TPoly t() { return monomial(1, 1); }

  const std::map<int, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Lowest exponent with a nonzero coefficient. Precondition: nonzero.
  int order() const;
  /// Highest exponent with a nonzero coefficient. Precondition: nonzero.
  int degree() const;
  Rational coeff(int exponent) const;
  const Rational& lowest_coeff() const;
  const Rational& leading_coeff() const;

  /// Multiplication by t^k.
  TPoly shifted(int k) const;
  /// Evaluation at a rational point (t must be nonzero when negative exponents occur).
  Rational eval(const Rational& t) const;

  TPoly operator-() const;
  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const TPoly& o);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(TPoly a, const TPoly& b) { return a *= b; }
  friend bool operator==(const TPoly& a, const TPoly& b) = default;

  /// Euclidean division of ordinary polynomials (all exponents >= 0). Throws on b = 0.
  static std::pair<TPoly, TPoly> divmod(const TPoly& a, const TPoly& b);
  /// Monic gcd of ordinary polynomials; gcd(0, 0) = 0.
  static TPoly gcd(TPoly a, TPoly b);

  std::string to_string() const;

 private:
  void add_term(int exponent, const Rational& c);

  std::map<int, Rational> terms_;
};

}  // namespace dml
