#include "dml/cohom/skew_form.hpp"

#include "dml/error.hpp"

namespace dml {

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  // Rows 0..i-1 contribute (n-1) + (n-2) + ... + (n-i) pairs.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

SkewForm SkewForm::from_coords(std::size_t n, Vec coords) {
  if (coords.size() != num_pairs(n)) throw DimensionMismatch("skew form needs n(n-1)/2 coordinates");
  SkewForm f(n);
  f.coords_ = std::move(coords);
  return f;
}

SkewForm SkewForm::delta(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw IndexOutOfRange("Delta index exceeds dimension");
  if (i == j) throw DiagonalDelta("Delta_ii is not a skew form");
  SkewForm f(n);
  f.add(i, j, 1);
  return f;
}

SkewForm SkewForm::from_gram(const MatrixQ& b) {
  if (b.rows() != b.cols()) throw DimensionMismatch("Gram matrix must be square");
  const std::size_t n = b.rows();
  SkewForm f(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!dml::is_zero(b(i, i))) throw DimensionMismatch("Gram matrix is not skew");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (b(i, j) != -b(j, i)) throw DimensionMismatch("Gram matrix is not skew");
      f.coords_[pair_index(n, i, j)] = b(i, j);
    }
  }
  return f;
}

Rational SkewForm::value(std::size_t i, std::size_t j) const {
  if (i == j) return 0;
  if (i < j) return coords_[pair_index(n_, i, j)];
  return -coords_[pair_index(n_, j, i)];
}

void SkewForm::add(std::size_t i, std::size_t j, const Rational& c) {
  if (i >= n_ || j >= n_) throw IndexOutOfRange("Delta index exceeds dimension");
  if (i == j) throw DiagonalDelta("Delta_ii is not a skew form");
  if (i < j)
    coords_[pair_index(n_, i, j)] += c;
  else
    coords_[pair_index(n_, j, i)] -= c;
}

Rational SkewForm::eval(const Vec& x, const Vec& y) const {
  if (x.size() != n_ || y.size() != n_) throw DimensionMismatch("skew form evaluated on wrong length");
  Rational s = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      const Rational& c = coords_[pair_index(n_, i, j)];
      if (!dml::is_zero(c)) s += c * (x[i] * y[j] - x[j] * y[i]);
    }
  return s;
}

MatrixQ SkewForm::gram() const {
  MatrixQ b(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      b(i, j) = coords_[pair_index(n_, i, j)];
      b(j, i) = -b(i, j);
    }
  return b;
}

SkewForm& SkewForm::operator+=(const SkewForm& o) {
  if (o.n_ != n_) throw DimensionMismatch("adding skew forms of different dimension");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

SkewForm& SkewForm::operator-=(const SkewForm& o) {
  if (o.n_ != n_) throw DimensionMismatch("subtracting skew forms of different dimension");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

SkewForm operator*(const Rational& s, SkewForm a) {
  for (auto& c : a.coords_) c *= s;
  return a;
}

std::string SkewForm::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      const Rational& c = coords_[pair_index(n_, i, j)];
      if (dml::is_zero(c)) continue;
      const Rational mag = abs(c);
      if (sgn(c) < 0)
        out += "-";
      else if (!out.empty())
        out += "+";
      if (mag != 1) out += mag.get_str() + "*";
      out += "[d" + std::to_string(i + 1) + (n_ > 9 ? "," : "") + std::to_string(j + 1) + "]";
    }
  return out.empty() ? "0" : out;
}

}  // namespace dml
