#pragma once

#include "dml/exact/linalg.hpp"
#include "dml/shell/catalog.hpp"
#include "dml/shell/parse.hpp"

#include <random>
#include <string>

namespace dml::test {

inline Algebra cat(const std::string& id) { return Catalog::builtin().get(id).algebra; }

/// Small random rationals p/q with |p| <= 5, 1 <= q <= 3.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  Rational q() {
    std::uniform_int_distribution<long> p(-5, 5), d(1, 3);
    Rational r(mpz_class(p(gen_)), mpz_class(d(gen_)));
    r.canonicalize();
    return r;
  }
  Rational nonzero() {
    for (;;)
      if (Rational r = q(); !is_zero(r)) return r;
  }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_); }
  MatrixQ matrix(std::size_t r, std::size_t c) {
    MatrixQ m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = q();
    return m;
  }
  MatrixQ invertible(std::size_t n) {
    for (;;) {
      MatrixQ m = matrix(n, n);
      if (inverse(m)) return m;
    }
  }

 private:
  std::mt19937_64 gen_;
};

inline std::string data_path(const std::string& rel) { return std::string(DML_DATA_DIR) + "/" + rel; }
inline std::string read_data(const std::string& rel) { return read_file(data_path(rel)); }

}  // namespace dml::test
