#pragma once

#include "dml/degen/graph.hpp"

#include <string>
#include <string_view>

namespace dml {

enum class GraphFormat { Dot, Json };

/// DOT: one node per class representative labelled with dim Der; solid edges are witnessed,
/// dashed edges transitive, dotted edges imported. Edges resting on an imported claim carry
/// the label UNWITNESSED. Output order follows the (sorted) graph, so it is deterministic.
std::string emit_graph_dot(const DegenerationGraph& g);

/// JSON with a fixed key order; parse_graph_json(emit_graph_json(g)) == g.
std::string emit_graph_json(const DegenerationGraph& g);

std::string emit_graph(const DegenerationGraph& g, GraphFormat format);

/// Throws SyntaxError on malformed input.
DegenerationGraph parse_graph_json(std::string_view text);

}  // namespace dml
