#pragma once

#include "dml/algcore/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dml {

struct CatalogEntry {
  std::string id;         ///< e.g. "D7_14", or "C7" for the zero algebra
  Algebra algebra;
  std::string provenance;  ///< where the table comes from, or how the entry is derived
  bool is_lie = true;
  bool indecomposable = true;
  /// For split entries D{n}_j = D{m}_j (+) C^{n-m}: the base id; empty otherwise.
  std::string base_id;
  /// Generators of H^2 as printed (cocycle expressions), when a table lists them.
  std::vector<std::string> printed_h2_generators;
  /// dim H^2 as claimed by the printed table (number of listed generators).
  std::optional<std::size_t> claimed_h2;
  /// Golden text of the table (parse_algebra format) for the base entries.
  std::string table_text;
};

/// Built-in catalog. Base tables are hard-coded; split entries D{n}_j with n larger than
/// the base dimension of index j are generated on demand, as are zero algebras "C{n}".
class Catalog {
 public:
  static const Catalog& builtin();

  /// Throws UnknownId.
  CatalogEntry get(const std::string& id) const;
  bool contains(const std::string& id) const;

  /// Base entries (the printed tables) in id order.
  const std::vector<CatalogEntry>& base_entries() const noexcept { return base_; }

  /// Every id D{dim}_j that resolves for this dimension, in index order.
  std::vector<std::string> ids_of_dim(std::size_t dim) const;

  /// All ids for dimensions 5..9.
  std::vector<std::string> all_ids() const;

  /// Dimension at which index j first appears (5, 6, 7, 8 or 9).
  static std::optional<std::size_t> base_dim(std::size_t index);

 private:
  Catalog();
  std::vector<CatalogEntry> base_;
};

/// Splits "D8_14" into (8, 14); nullopt for malformed ids.
std::optional<std::pair<std::size_t, std::size_t>> split_id(const std::string& id);

std::string make_id(std::size_t dim, std::size_t index);

}  // namespace dml
