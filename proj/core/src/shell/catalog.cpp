#include "dml/shell/catalog.hpp"

#include "dml/error.hpp"

#include <array>
#include <cctype>
#include <map>

namespace dml {
namespace {

struct Table {
  const char* id;
  std::size_t dim;
  std::vector<std::array<int, 4>> products;  // e_i e_j = coef * e_k, 1-based (i, j, k, coef)
};

// Multiplication tables exactly as printed, including the order of factors.
const std::vector<Table>& tables() {
  static const std::vector<Table> t = {
    {"D5_01", 5, {{1, 2, 3, 1}}},
    {"D5_02", 5, {{1, 2, 5, 1}, {3, 4, 5, 1}}},
    {"D5_03", 5, {{1, 2, 4, 1}, {1, 3, 5, 1}}},
    {"D6_04", 6, {{1, 3, 5, 1}, {2, 4, 6, 1}}},
    {"D6_05", 6, {{1, 2, 5, 1}, {1, 3, 6, 1}, {3, 4, 5, 1}}},
    {"D6_06", 6, {{1, 2, 4, 1}, {1, 3, 5, 1}, {2, 3, 6, 1}}},
    {"D7_07", 7, {{1, 2, 7, 1}, {3, 4, 7, 1}, {5, 6, 7, 1}}},
    {"D7_08", 7, {{1, 2, 6, 1}, {1, 4, 7, 1}, {3, 5, 7, 1}}},
    {"D7_09", 7, {{1, 2, 6, 1}, {1, 5, 7, 1}, {3, 4, 6, 1}, {2, 3, 7, 1}}},
    {"D7_10", 7, {{1, 2, 5, 1}, {2, 3, 6, 1}, {2, 4, 7, 1}}},
    {"D7_11", 7, {{1, 2, 5, 1}, {2, 3, 6, 1}, {3, 4, 7, 1}}},
    {"D7_12", 7, {{1, 2, 5, 1}, {2, 3, 6, 1}, {2, 4, 7, 1}, {3, 4, 5, 1}}},
    {"D7_13", 7, {{1, 2, 5, 1}, {1, 3, 6, 1}, {2, 4, 7, 1}, {3, 4, 5, 1}}},
    {"D7_14", 7, {{1, 2, 4, 1}, {1, 3, 5, 1}, {1, 6, 7, 1}, {2, 3, 6, 1}, {2, 5, 7, -1}, {3, 4, 7, 1}}},
    {"D8_15", 8, {{1, 2, 4, 1}, {3, 2, 5, 1}, {6, 7, 8, 1}}},
    {"D8_16", 8, {{1, 2, 5, 1}, {3, 4, 5, 1}, {6, 7, 8, 1}}},
    {"D8_17", 8, {{1, 2, 7, 1}, {3, 4, 8, 1}, {5, 6, 7, 1}, {5, 6, 8, 1}}},
    {"D8_18", 8, {{1, 2, 7, 1}, {4, 5, 7, 1}, {1, 3, 8, 1}, {4, 6, 8, 1}}},
    {"D8_19", 8, {{1, 2, 7, 1}, {4, 5, 7, 1}, {3, 4, 8, 1}, {5, 6, 8, 1}}},
    {"D8_20", 8, {{1, 2, 7, 1}, {3, 4, 7, 1}, {5, 6, 7, 1}, {4, 5, 8, 1}}},
    {"D8_21", 8, {{1, 2, 7, 1}, {3, 4, 7, 1}, {5, 6, 7, 1}, {2, 3, 8, 1}, {4, 5, 8, 1}}},
    {"D8_22", 8, {{1, 2, 6, 1}, {4, 5, 6, 1}, {2, 3, 7, 1}, {1, 3, 8, 1}}},
    {"D8_23", 8, {{1, 2, 6, 1}, {4, 5, 6, 1}, {2, 3, 7, 1}, {3, 4, 8, 1}}},
    {"D8_24", 8, {{1, 2, 6, 1}, {2, 3, 7, 1}, {4, 5, 7, 1}, {3, 4, 8, 1}}},
    {"D8_25", 8, {{1, 2, 6, 1}, {2, 3, 7, 1}, {4, 5, 7, 1}, {3, 4, 8, 1}, {5, 1, 8, 1}}},
    {"D8_26", 8, {{1, 2, 6, 1}, {1, 3, 7, 1}, {1, 4, 8, 1}, {2, 5, 7, 1}}},
    {"D8_27", 8, {{1, 2, 6, 1}, {1, 3, 7, 1}, {1, 4, 8, 1}, {2, 3, 8, 1}, {4, 5, 7, 1}}},
    {"D8_28", 8, {{1, 2, 6, 1}, {1, 3, 7, 1}, {1, 5, 8, 1}, {2, 4, 8, 1}, {3, 4, 6, 1}}},
    {"D8_29", 8, {{1, 2, 6, 1}, {1, 3, 7, 1}, {2, 3, 8, 1}, {1, 4, 8, 1}, {2, 5, 7, 1}}},
    {"D8_30", 8, {{1, 2, 6, 1}, {1, 3, 7, 1}, {2, 3, 8, 1}, {1, 4, 8, 1}, {2, 5, 7, 1}, {4, 5, 6, 1}}},
    {"D8_31", 8, {{1, 2, 6, 1}, {2, 3, 7, 1}, {3, 4, 7, 1}, {4, 5, 8, 1}}},
    {"D8_32", 8, {{1, 2, 6, 1}, {2, 3, 7, 1}, {3, 4, 8, 1}, {4, 5, 7, 1}, {5, 1, 7, 1}}},
    {"D8_33", 8, {{1, 2, 5, 1}, {2, 3, 6, 1}, {3, 4, 7, 1}, {4, 1, 8, 1}}},
    {"D8_34", 8, {{1, 2, 5, 1}, {1, 3, 6, 1}, {2, 3, 7, 1}, {1, 4, 8, 1}}},
    {"D8_35", 8, {{1, 2, 5, 1}, {1, 3, 6, 1}, {2, 4, 6, 1}, {2, 3, 7, 1}, {1, 4, 8, 1}}},
    {"D8_36", 8, {{1, 2, 4, 1}, {1, 3, 5, 1}, {2, 3, 6, 1}, {1, 6, 8, 1}, {2, 5, 8, -1}, {3, 4, 8, 1}, {3, 7, 8, 1}}},
    {"D9_37", 9, {{1, 2, 4, 1}, {1, 3, 5, 1}, {2, 3, 6, 1}, {1, 6, 8, 1}, {2, 5, 8, -1}, {3, 4, 8, 1}, {3, 7, 9, -1}}},
    {"D9_38", 9, {{1, 2, 4, 1}, {1, 3, 5, 1}, {2, 3, 6, 1}, {1, 6, 9, 1}, {2, 5, 9, -1}, {3, 4, 9, 1}, {7, 8, 9, 1}}},
  };
  return t;
}

// Generators of H^2 as printed; duplicates are kept so the claimed count matches the table.
const std::map<std::string, std::vector<std::string>>& printed_h2() {
  static const std::map<std::string, std::vector<std::string>> m = {
    {"D5_01", {"[d14]", "[d15]", "[d24]", "[d25]", "[d45]"}},
    {"D5_02", {"[d13]", "[d14]", "[d23]", "[d24]"}},
    {"D5_03", {"[d23]"}},
    {"D6_04", {"[d12]", "[d14]", "[d23]", "[d34]"}},
    {"D6_05", {"[d14]", "[d23]", "[d24]"}},
    {"D6_06", {"[d16]-[d25]+[d34]"}},
    {"D7_06", {"[d16]-[d25]+[d34]", "[d17]", "[d27]", "[d37]"}},
    {"D7_07", {"[d13]", "[d14]", "[d15]", "[d16]", "[d23]", "[d24]", "[d25]", "[d26]", "[d35]", "[d36]", "[d45]", "[d46]"}},
    {"D7_08", {"[d13]", "[d14]", "[d15]", "[d23]", "[d24]", "[d25]", "[d34]", "[d45]"}},
    {"D7_09", {"[d13]", "[d14]", "[d24]", "[d25]", "[d35]", "[d45]"}},
    {"D7_10", {"[d13]", "[d14]", "[d34]"}},
    {"D7_11", {"[d13]", "[d14]", "[d24]"}},
    {"D7_12", {"[d13]", "[d14]"}},
    {"D7_13", {"[d14]", "[d23]"}},
    {"D8_06", {"[d16]-[d25]+[d34]", "[d17]", "[d18]", "[d27]", "[d28]", "[d37]", "[d38]", "[d78]"}},
    {"D8_15", {"[d13]", "[d16]", "[d17]", "[d26]", "[d27]", "[d36]", "[d37]"}},
    {"D8_16", {"[d13]", "[d14]", "[d16]", "[d17]", "[d23]", "[d24]", "[d26]", "[d27]", "[d36]", "[d37]", "[d46]", "[d47]"}},
    {"D8_17", {"[d13]", "[d14]", "[d15]", "[d16]", "[d23]", "[d24]", "[d25]", "[d26]", "[d35]", "[d36]", "[d45]", "[d46]"}},
    {"D8_18", {"[d14]", "[d15]", "[d16]", "[d23]", "[d24]", "[d25]", "[d26]", "[d34]", "[d35]", "[d36]", "[d56]"}},
    {"D8_19", {"[d13]", "[d14]", "[d15]", "[d16]", "[d23]", "[d24]", "[d25]", "[d26]", "[d35]", "[d36]", "[d46]"}},
    {"D8_20", {"[d13]", "[d14]", "[d15]", "[d16]", "[d23]", "[d24]", "[d25]", "[d13]", "[d26]", "[d35]", "[d36]", "[d46]"}},
    {"D8_21", {"[d13]", "[d14]", "[d15]", "[d16]", "[d24]", "[d25]", "[d26]", "[d35]", "[d36]", "[d46]"}},
    {"D8_22", {"[d14]", "[d15]", "[d24]", "[d25]", "[d34]", "[d35]"}},
    {"D8_23", {"[d13]", "[d14]", "[d15]", "[d24]", "[d25]", "[d35]"}},
    {"D8_24", {"[d13]", "[d14]", "[d15]", "[d24]", "[d25]", "[d35]"}},
    {"D8_25", {"[d13]", "[d14]", "[d24]", "[d25]", "[d35]"}},
    {"D8_26", {"[d15]", "[d23]", "[d24]", "[d34]", "[d35]", "[d45]"}},
    {"D8_27", {"[d15]", "[d24]", "[d15]", "[d34]", "[d35]"}},
    {"D8_28", {"[d14]", "[d23]", "[d25]", "[d35]", "[d45]"}},
    {"D8_29", {"[d15]", "[d24]", "[d34]", "[d35]", "[d45]"}},
    {"D8_30", {"[d15]", "[d24]", "[d34]", "[d35]"}},
    {"D8_31", {"[d13]", "[d14]", "[d15]", "[d24]", "[d25]", "[d35]"}},
    {"D8_32", {"[d13]", "[d14]", "[d24]", "[d25]", "[d35]"}},
    {"D8_33", {"[d13]", "[d24]"}},
    {"D8_34", {"[d15]", "[d24]", "[d25]", "[d34]", "[d35]", "[d45]"}},
    {"D8_35", {"[d34]"}},
  };
  return m;
}

std::string provenance_of(const std::string& id, std::size_t dim) {
  if (id == "D7_14") return "new non-Lie algebra, extension of D6_06 by [d16]-[d25]+[d34]";
  if (id == "D8_36") return "new non-Lie algebra, extension of D7_06 by ([d16]-[d25]+[d34]) + [d37]";
  if (id == "D9_37") return "new non-Lie algebra, extension of D7_06 by ([d16]-[d25]+[d34], [d37])";
  if (id == "D9_38") return "new non-Lie algebra, extension of D8_06 by ([d16]-[d25]+[d34]) + [d78]";
  if (dim == 8) return "reference list of indecomposable 2-step nilpotent Lie algebras, dimension 8";
  return "printed table of dimension " + std::to_string(dim);
}

std::string text_of(const Table& t) {
  std::string s = "dim " + std::to_string(t.dim) + "\n";
  for (std::size_t p = 0; p < t.products.size();) {
    const auto& first = t.products[p];
    s += "e" + std::to_string(first[0]) + " e" + std::to_string(first[1]) + " =";
    bool lead = true;
    for (; p < t.products.size() && t.products[p][0] == first[0] && t.products[p][1] == first[1]; ++p) {
      const int c = t.products[p][3];
      s += c < 0 ? (lead ? " -" : " - ") : (lead ? " " : " + ");
      s += "e" + std::to_string(t.products[p][2]);
      lead = false;
    }
    s += "\n";
  }
  return s;
}

Algebra algebra_of(const Table& t) {
  std::vector<ProductTerm> terms;
  for (const auto& p : t.products)
    terms.push_back({static_cast<std::size_t>(p[0] - 1), static_cast<std::size_t>(p[1] - 1),
                     static_cast<std::size_t>(p[2] - 1), Rational(p[3])});
  return Algebra::from_products(t.dim, terms);
}

bool is_non_lie_index(std::size_t j) { return j == 14 || j == 36 || j == 37 || j == 38; }

void attach_h2_claim(CatalogEntry& e) {
  const auto& m = printed_h2();
  if (auto it = m.find(e.id); it != m.end()) {
    e.printed_h2_generators = it->second;
    e.claimed_h2 = it->second.size();
  }
}

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> split_id(const std::string& id) {
  if (id.size() < 4 || id[0] != 'D') return std::nullopt;
  const auto us = id.find('_');
  if (us == std::string::npos || us < 2 || us + 1 >= id.size()) return std::nullopt;
  std::size_t dim = 0;
  std::size_t idx = 0;
  for (std::size_t p = 1; p < us; ++p) {
    if (!std::isdigit(static_cast<unsigned char>(id[p]))) return std::nullopt;
    dim = dim * 10 + static_cast<std::size_t>(id[p] - '0');
  }
  for (std::size_t p = us + 1; p < id.size(); ++p) {
    if (!std::isdigit(static_cast<unsigned char>(id[p]))) return std::nullopt;
    idx = idx * 10 + static_cast<std::size_t>(id[p] - '0');
  }
  if (id.size() - us - 1 != 2) return std::nullopt;
  return std::make_pair(dim, idx);
}

std::string make_id(std::size_t dim, std::size_t index) {
  return "D" + std::to_string(dim) + "_" + (index < 10 ? "0" : "") + std::to_string(index);
}

std::optional<std::size_t> Catalog::base_dim(std::size_t j) {
  if (j >= 1 && j <= 3) return 5;
  if (j >= 4 && j <= 6) return 6;
  if (j >= 7 && j <= 14) return 7;
  if (j >= 15 && j <= 36) return 8;
  if (j >= 37 && j <= 38) return 9;
  return std::nullopt;
}

Catalog::Catalog() {
  for (const auto& t : tables()) {
    CatalogEntry e;
    e.id = t.id;
    e.algebra = algebra_of(t);
    e.provenance = provenance_of(e.id, t.dim);
    e.is_lie = !is_non_lie_index(split_id(e.id)->second);
    e.indecomposable = true;
    e.table_text = text_of(t);
    attach_h2_claim(e);
    base_.push_back(std::move(e));
  }
}

const Catalog& Catalog::builtin() {
  static const Catalog c;
  return c;
}

bool Catalog::contains(const std::string& id) const {
  try {
    get(id);
    return true;
  } catch (const UnknownId&) {
    return false;
  }
}

CatalogEntry Catalog::get(const std::string& id) const {
  if (id.size() >= 2 && id[0] == 'C') {
    std::size_t n = 0;
    bool ok = true;
    for (std::size_t p = 1; p < id.size(); ++p) {
      if (!std::isdigit(static_cast<unsigned char>(id[p]))) ok = false;
      else n = n * 10 + static_cast<std::size_t>(id[p] - '0');
    }
    if (ok && n >= 1 && n <= 64) {
      CatalogEntry e;
      e.id = id;
      e.algebra = Algebra(n);
      e.provenance = "zero algebra of dimension " + std::to_string(n);
      e.indecomposable = n == 1;
      return e;
    }
  }
  const auto parts = split_id(id);
  if (!parts) throw UnknownId("malformed catalog id '" + id + "'");
  const auto [dim, j] = *parts;
  const auto bd = base_dim(j);
  if (!bd || dim < *bd || dim > 64) throw UnknownId("unknown catalog id '" + id + "'");
  const CatalogEntry& base = base_[j - 1];
  if (dim == *bd) return base;

  CatalogEntry e;
  e.id = id;
  e.algebra = direct_sum_with_trivial(base.algebra, dim - *bd);
  e.base_id = base.id;
  e.provenance = "split: " + base.id + " (+) C^" + std::to_string(dim - *bd);
  e.is_lie = base.is_lie;
  e.indecomposable = false;
  attach_h2_claim(e);
  return e;
}

std::vector<std::string> Catalog::ids_of_dim(std::size_t dim) const {
  std::vector<std::string> out;
  for (std::size_t j = 1; j <= base_.size(); ++j)
    if (*base_dim(j) <= dim) out.push_back(make_id(dim, j));
  return out;
}

std::vector<std::string> Catalog::all_ids() const {
  std::vector<std::string> out;
  for (std::size_t d = 5; d <= 9; ++d)
    for (auto& id : ids_of_dim(d)) out.push_back(std::move(id));
  return out;
}

}  // namespace dml
