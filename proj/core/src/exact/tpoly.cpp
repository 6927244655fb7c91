#include "dml/exact/tpoly.hpp"

#include <stdexcept>

namespace dml {

TPoly::TPoly(const Rational& c) {
  if (!dml::is_zero(c)) terms_.emplace(0, c);
}

TPoly TPoly::monomial(const Rational& c, int exponent) {
  TPoly p;
  p.add_term(exponent, c);
  return p;
}

void TPoly::add_term(int exponent, const Rational& c) {
  if (dml::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (dml::is_zero(it->second)) terms_.erase(it);
}

int TPoly::order() const {
  if (terms_.empty()) throw std::domain_error("order of the zero polynomial");
  return terms_.begin()->first;
}

int TPoly::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

Rational TPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Rational& TPoly::lowest_coeff() const {
  if (terms_.empty()) throw std::domain_error("lowest coefficient of the zero polynomial");
  return terms_.begin()->second;
}

const Rational& TPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

TPoly TPoly::shifted(int k) const {
  TPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
  return p;
}

Rational TPoly::eval(const Rational& t) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0 && dml::is_zero(t)) throw std::domain_error("negative power evaluated at t = 0");
    Rational pw = 1;
    const Rational base = e < 0 ? Rational(1 / t) : t;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) pw *= base;
    sum += c * pw;
  }
  return sum;
}

TPoly TPoly::operator-() const {
  TPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TPoly& TPoly::operator*=(const TPoly& o) {
  TPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  terms_ = std::move(out.terms_);
  return *this;
}

std::pair<TPoly, TPoly> TPoly::divmod(const TPoly& a, const TPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if ((!a.is_zero() && a.order() < 0) || b.order() < 0)
    throw std::domain_error("divmod requires ordinary polynomials");
  TPoly q;
  TPoly r = a;
  const int db = b.degree();
  const Rational lb = b.leading_coeff();
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    const Rational f = r.leading_coeff() / lb;
    q.add_term(shift, f);
    r -= monomial(f, shift) * b;
  }
  return {q, r};
}

TPoly TPoly::gcd(TPoly a, TPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const Rational lc = a.leading_coeff();
  for (auto& [e, c] : a.terms_) c /= lc;
  return a;
}

std::string TPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    const bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const bool unit = mag == 1;
    if (e == 0) {
      out += dml::to_string(mag);
      continue;
    }
    if (!unit) out += dml::to_string(mag) + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace dml
