#include "dml/oracle/brute_force.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace dml::oracle {
namespace {

using Q = boost::multiprecision::cpp_rational;
using Row = std::vector<Q>;

Q to_q(const Rational& r) { return Q(r.get_str()); }

// Row-echelon rank by plain Gaussian elimination.
std::size_t rank_of(std::vector<Row> rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Q f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<std::vector<Q>>> tensor(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<std::vector<Q>>> c(n, std::vector<std::vector<Q>>(n, std::vector<Q>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j][k] = to_q(a.constant(i, j, k));
  return c;
}

}  // namespace

std::size_t cocycle_dim(const Algebra& a) {
  const std::size_t n = a.dim();
  const auto c = tensor(a);
  const std::size_t unknowns = n * n;  // theta(e_p, e_q) at p * n + q
  std::vector<Row> rows;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      Row r(unknowns);
      r[p * n + q] += 1;
      r[q * n + p] += 1;
      rows.push_back(r);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Row r(unknowns);
        for (std::size_t l = 0; l < n; ++l) {
          r[l * n + k] += c[i][j][l];
          r[i * n + l] += c[j][k][l];
        }
        rows.push_back(r);
      }
  return unknowns - rank_of(rows, unknowns);
}

std::size_t derivation_dim(const Algebra& a) {
  const std::size_t n = a.dim();
  const auto c = tensor(a);
  const std::size_t unknowns = n * n;  // D e_q = sum_p d[p * n + q] e_p
  std::vector<Row> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Row r(unknowns);
        for (std::size_t l = 0; l < n; ++l) {
          r[k * n + l] += c[i][j][l];
          r[l * n + i] -= c[l][j][k];
          r[l * n + j] -= c[i][l][k];
        }
        rows.push_back(r);
      }
  return unknowns - rank_of(rows, unknowns);
}

std::size_t annihilator_dim(const Algebra& a) {
  const std::size_t n = a.dim();
  const auto c = tensor(a);
  std::vector<Row> rows;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Row r(n);
      for (std::size_t i = 0; i < n; ++i) r[i] = c[i][j][k];
      rows.push_back(r);
    }
  return n - rank_of(rows, n);
}

std::size_t radical_dim(const std::vector<std::vector<long>>& gram) {
  const std::size_t n = gram.size();
  std::vector<Row> rows;
  for (const auto& g : gram) {
    Row r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = g[j];
    rows.push_back(r);
  }
  return n - rank_of(rows, n);
}

}  // namespace dml::oracle
