#include "dml/exact/ratfunc.hpp"

#include "dml/error.hpp"

#include <stdexcept>

namespace dml {

RatFunc::RatFunc(TPoly num, TPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = TPoly(1);
    return;
  }
  const int m = num_.order() - den_.order();
  TPoly p = num_.shifted(-num_.order());
  TPoly q = den_.shifted(-den_.order());
  if (q.degree() > 0 && p.degree() > 0) {
    const TPoly g = TPoly::gcd(p, q);
    if (g.degree() > 0) {
      p = TPoly::divmod(p, g).first;
      q = TPoly::divmod(q, g).first;
    }
  }
  const Rational c = q.lowest_coeff();
  if (c != 1) {
    const TPoly inv(Rational(1 / c));
    p *= inv;
    q *= inv;
  }
  num_ = p.shifted(m);
  den_ = std::move(q);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(t)");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    canonicalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

Rational RatFunc::eval(const Rational& t0) const {
  const Rational d = den_.eval(t0);
  if (dml::is_zero(d)) throw std::domain_error("rational function evaluated at a pole");
  return num_.eval(t0) / d;
}

std::string RatFunc::to_string() const {
  if (den_ == TPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Rational limit_at_zero(const RatFunc& f) {
  if (f.is_zero()) return 0;
  // Canonical form puts every power of t into the numerator and den(0) = 1.
  const int ord = f.num().order() - f.den().order();
  if (ord < 0) throw PoleAtZero("pole of order " + std::to_string(-ord) + " at t = 0 in " + f.to_string());
  if (ord > 0) return 0;
  return f.num().lowest_coeff() / f.den().lowest_coeff();
}

}  // namespace dml
