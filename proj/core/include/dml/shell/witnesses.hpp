#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dml {

/// A parametric basis for source -> target in parse_parametric_basis format.
struct WitnessRecord {
  std::string source;
  std::string target;
  std::string basis_text;
  bool printed = false;  ///< true for the bases printed with the classification
  std::string note;
};

/// Witnesses for the edges of the 7-dimensional degeneration figure.
const std::vector<WitnessRecord>& seven_dim_witnesses();

/// Printed parametric bases (source, target, text), including the 8-dimensional one.
const std::vector<WitnessRecord>& printed_witnesses();

std::optional<WitnessRecord> find_witness(const std::string& source, const std::string& target);

/// A basis (rows = new basis vectors) carrying `a` onto `b` literally.
struct IsomorphismRecord {
  std::string a;
  std::string b;
  std::string basis_text;
  std::string note;
};

const std::vector<IsomorphismRecord>& recorded_isomorphisms();

struct FigureEdge {
  std::string from;
  std::string to;
};

/// Edges of the corrected 7-dimensional figure, in printed order.
const std::vector<FigureEdge>& seven_dim_figure_edges();

/// Figure edges that cannot hold, with the reason.
struct DisputedEdge {
  std::string from;
  std::string to;
  std::string reason;
};
const std::vector<DisputedEdge>& disputed_edges();

/// Orbit-dimension column under which the figure draws the node.
std::optional<std::size_t> seven_dim_figure_level(const std::string& id);

}  // namespace dml
