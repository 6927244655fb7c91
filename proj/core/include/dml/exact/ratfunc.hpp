#pragma once

#include "dml/exact/tpoly.hpp"

#include <string>

namespace dml {

/// Element of Q(t) in canonical form num/den:
///   - den is an ordinary polynomial with den(0) = 1,
///   - num = t^m * p(t) with p(0) != 0 and gcd(p, den) = 1,
///   - zero is 0/1.
/// Equal functions therefore have identical (num, den).
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(int c) : RatFunc(Rational(c)) {}           // NOLINT
  RatFunc(TPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  /// Throws std::domain_error when den is zero.
  RatFunc(TPoly num, TPoly den);

  const TPoly& num() const noexcept { return num_; }
  const TPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
  bool is_polynomial() const { return den_ == TPoly(1); }

  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  /// Value at t = t0. Throws std::domain_error when t0 is a pole.
  Rational eval(const Rational& t0) const;

  std::string to_string() const;

 private:
  void canonicalize();

  TPoly num_;
  TPoly den_;
};

/// Value of f as t -> 0. Throws PoleAtZero when the order of t in the numerator is below
/// the order in the denominator.
Rational limit_at_zero(const RatFunc& f);

}  // namespace dml
