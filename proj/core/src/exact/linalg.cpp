#include "dml/exact/linalg.hpp"

#include <sstream>

namespace dml {

RrefResult rref(const MatrixQ& m) {
  RrefResult out;
  out.rref = m;
  out.pivots = reduce_to_rref(out.rref);
  out.rank = out.pivots.size();

  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : out.pivots) is_pivot[p] = true;
  out.kernel = MatrixQ(n - out.rank, n);
  std::size_t k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    out.kernel(k, free) = 1;
    for (std::size_t r = 0; r < out.rank; ++r) out.kernel(k, out.pivots[r]) = -out.rref(r, free);
    ++k;
  }
  return out;
}

MatrixQ kernel(const MatrixQ& m) { return rref(m).kernel; }

std::size_t rank(const MatrixQ& m) {
  MatrixQ copy = m;
  return reduce_to_rref(copy).size();
}

std::optional<Vec> solve_combination(const MatrixQ& rows, const Vec& target) {
  if (target.size() != rows.cols()) throw DimensionMismatch("solve_combination: target length");
  const std::size_t k = rows.rows();
  const std::size_t n = rows.cols();
  // Solve rows^T x = target as an augmented system.
  MatrixQ aug(n, k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = rows(j, i);
    aug(i, k) = target[i];
  }
  const auto pivots = reduce_to_rref(aug);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  Vec x(k, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, k);
  return x;
}

std::string to_string(const MatrixQ& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << '\n';
  }
  return os.str();
}

}  // namespace dml
