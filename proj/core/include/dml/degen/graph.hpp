#pragma once

#include "dml/algcore/structure.hpp"
#include "dml/degen/parametric.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dml {

struct GraphNode {
  std::string id;
  InvariantFingerprint fp;
  bool jacobi = true;
  /// Orbit dimension printed for this node in a reference figure, when there is one.
  std::optional<std::size_t> figure_level;

  /// n^2 - dim Der, the dimension of the orbit.
  std::size_t orbit_dim() const { return fp.dim * fp.dim - fp.der_dim; }
  friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

enum class EdgeKind {
  Witnessed,   ///< checked parametric basis
  Imported,    ///< taken from a reference without a basis (UNWITNESSED)
  Transitive,  ///< implied by composition
};

std::string to_string(EdgeKind k);

struct GraphEdge {
  std::string from;
  std::string to;
  EdgeKind kind = EdgeKind::Witnessed;
  /// For transitive edges: true when some step of every known path is imported.
  bool relies_on_import = false;
  std::string note;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// A claim presented to build_graph together with its verification status.
struct CheckedClaim {
  std::string from;
  std::string to;
  ClaimStatus status = ClaimStatus::Unwitnessed;
  std::string note;
};

struct DegenerationGraph {
  std::vector<GraphNode> nodes;  ///< sorted by id
  std::vector<GraphEdge> edges;  ///< sorted by (from, to); endpoints are class representatives
  /// Isomorphism classes; the first member is the representative. Sorted by representative.
  std::vector<std::vector<std::string>> classes;
  /// Representatives of classes with no incoming edge.
  std::vector<std::string> rigid_candidates;
  /// Proper edges whose endpoints violate der_dim(from) < der_dim(to), and cycles.
  std::vector<std::string> violations;

  const GraphNode* node(const std::string& id) const;
  const GraphEdge* edge(const std::string& from, const std::string& to) const;
  std::size_t count(EdgeKind k) const;
  /// Representative of the class containing id (id itself when not merged).
  std::string representative(const std::string& id) const;

  friend bool operator==(const DegenerationGraph&, const DegenerationGraph&) = default;
};

/// Assembles the graph. Claims must be verified (Verified / VerifiedViaIsomorphism) or
/// Unwitnessed (kept as imported edges); anything else throws UnverifiedClaim.
/// Each isomorphism pair (rep, other) merges `other` into the class of `rep`.
/// Edges are closed under transitivity.
DegenerationGraph build_graph(std::vector<GraphNode> nodes, const std::vector<CheckedClaim>& claims,
                              const std::vector<std::pair<std::string, std::string>>& isomorphisms = {});

/// Transitive closure of an edge list on the given nodes; existing edges keep their kind.
std::vector<GraphEdge> transitive_closure(const std::vector<std::string>& nodes, std::vector<GraphEdge> edges);

}  // namespace dml
