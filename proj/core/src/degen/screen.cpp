#include "dml/degen/screen.hpp"

#include "dml/algcore/identities.hpp"
#include "dml/error.hpp"

#include <algorithm>

namespace dml {
namespace {

std::string dims_text(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// dim A^k for any k >= 1; past the end of the list the series has stabilized.
std::size_t lcs_at(const InvariantFingerprint& f, std::size_t k) {
  if (f.lcs_dims.empty()) return 0;
  return k <= f.lcs_dims.size() ? f.lcs_dims[k - 1] : f.lcs_dims.back();
}

std::size_t product_at(const InvariantFingerprint& f, std::size_t k, std::size_t l) {
  const std::size_t len = f.lcs_dims.size();
  const auto it = f.product_dims.find({std::min(k, len), std::min(l, len)});
  return it == f.product_dims.end() ? 0 : it->second;
}

}  // namespace

bool ScreenReport::refuted() const {
  return std::any_of(checks.begin(), checks.end(), [](const ScreenCheck& c) { return !c.pass; });
}

std::optional<std::string> ScreenReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return c.name;
  return std::nullopt;
}

ScreenReport necessary_conditions(const InvariantFingerprint& fa, bool jacobi_a, const InvariantFingerprint& fb,
                                  bool jacobi_b) {
  if (fa.dim != fb.dim) throw DimensionMismatch("degeneration screen needs equal dimensions");
  ScreenReport rep;

  rep.checks.push_back({"der_dim", fa.der_dim < fb.der_dim,
                        std::to_string(fa.der_dim) + " < " + std::to_string(fb.der_dim)});
  rep.checks.push_back({"ann_dim", fa.ann_dim <= fb.ann_dim,
                        std::to_string(fa.ann_dim) + " <= " + std::to_string(fb.ann_dim)});

  const std::size_t len = std::max(fa.lcs_dims.size(), fb.lcs_dims.size());
  bool lcs_ok = true;
  for (std::size_t k = 1; k <= len; ++k) lcs_ok = lcs_ok && lcs_at(fb, k) <= lcs_at(fa, k);
  rep.checks.push_back({"lcs_dims", lcs_ok, dims_text(fb.lcs_dims) + " <= " + dims_text(fa.lcs_dims)});

  ScreenCheck prod{"product_dims", true, "all dim(B^k B^l) <= dim(A^k A^l)"};
  for (std::size_t k = 1; k <= len && prod.pass; ++k)
    for (std::size_t l = 1; l <= len; ++l) {
      const std::size_t pb = product_at(fb, k, l);
      const std::size_t pa = product_at(fa, k, l);
      if (pb > pa) {
        prod.pass = false;
        prod.detail = "dim(B^" + std::to_string(k) + " B^" + std::to_string(l) + ") = " + std::to_string(pb) +
                      " > " + std::to_string(pa);
        break;
      }
    }
  rep.checks.push_back(prod);

  rep.checks.push_back({"jacobi", !jacobi_a || jacobi_b,
                        jacobi_a ? (jacobi_b ? "both Lie" : "Lie source, non-Lie target") : "source is not Lie"});
  return rep;
}

ScreenReport necessary_conditions(const Algebra& a, const Algebra& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("degeneration screen needs equal dimensions");
  return necessary_conditions(fingerprint(a), check_identities(a).jacobi, fingerprint(b), check_identities(b).jacobi);
}

}  // namespace dml
