#include "dml/shell/graph_io.hpp"

#include "dml/error.hpp"

#include <json.hpp>

#include <sstream>

namespace dml {
namespace {

using nlohmann::ordered_json;

std::string dot_id(const std::string& s) { return "\"" + s + "\""; }

ordered_json node_json(const GraphNode& n) {
  ordered_json j;
  j["id"] = n.id;
  j["dim"] = n.fp.dim;
  j["der_dim"] = n.fp.der_dim;
  j["orbit_dim"] = n.orbit_dim();
  j["ann_dim"] = n.fp.ann_dim;
  j["lcs_dims"] = n.fp.lcs_dims;
  ordered_json pd = ordered_json::array();
  for (const auto& [kl, d] : n.fp.product_dims) pd.push_back({kl.first, kl.second, d});
  j["product_dims"] = pd;
  j["jacobi"] = n.jacobi;
  j["figure_level"] = n.figure_level ? ordered_json(*n.figure_level) : ordered_json(nullptr);
  return j;
}

EdgeKind kind_from(const std::string& s) {
  if (s == "witnessed") return EdgeKind::Witnessed;
  if (s == "imported") return EdgeKind::Imported;
  if (s == "transitive") return EdgeKind::Transitive;
  throw SyntaxError("unknown edge kind '" + s + "'", 1, 1);
}

}  // namespace

std::string emit_graph_dot(const DegenerationGraph& g) {
  std::ostringstream os;
  os << "digraph degenerations {\n";
  if (!g.nodes.empty()) os << "  node [shape=box];\n";
  for (const auto& n : g.nodes) {
    if (g.representative(n.id) != n.id) continue;
    std::string label = n.id;
    for (const auto& c : g.classes)
      if (c.front() == n.id)
        for (std::size_t i = 1; i < c.size(); ++i) label += " = " + c[i];
    label += "\\nder " + std::to_string(n.fp.der_dim);
    os << "  " << dot_id(n.id) << " [label=" << dot_id(label) << "];\n";
  }
  for (const auto& e : g.edges) {
    std::string attrs;
    switch (e.kind) {
      case EdgeKind::Witnessed: attrs = "style=solid"; break;
      case EdgeKind::Imported: attrs = "style=dotted, label=\"UNWITNESSED\""; break;
      case EdgeKind::Transitive:
        attrs = e.relies_on_import ? "style=dashed, label=\"UNWITNESSED\"" : "style=dashed";
        break;
    }
    os << "  " << dot_id(e.from) << " -> " << dot_id(e.to) << " [" << attrs << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string emit_graph_json(const DegenerationGraph& g) {
  ordered_json j;
  j["nodes"] = ordered_json::array();
  for (const auto& n : g.nodes) j["nodes"].push_back(node_json(n));
  j["edges"] = ordered_json::array();
  for (const auto& e : g.edges) {
    ordered_json x;
    x["from"] = e.from;
    x["to"] = e.to;
    x["kind"] = to_string(e.kind);
    x["relies_on_import"] = e.relies_on_import;
    x["note"] = e.note;
    j["edges"].push_back(std::move(x));
  }
  j["classes"] = g.classes;
  j["rigid_candidates"] = g.rigid_candidates;
  j["violations"] = g.violations;
  return j.dump(2) + "\n";
}

std::string emit_graph(const DegenerationGraph& g, GraphFormat format) {
  return format == GraphFormat::Dot ? emit_graph_dot(g) : emit_graph_json(g);
}

DegenerationGraph parse_graph_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(e.what(), 1, e.byte);
  }
  DegenerationGraph g;
  try {
    for (const auto& x : j.at("nodes")) {
      GraphNode n;
      n.id = x.at("id").get<std::string>();
      n.fp.dim = x.at("dim").get<std::size_t>();
      n.fp.der_dim = x.at("der_dim").get<std::size_t>();
      n.fp.ann_dim = x.at("ann_dim").get<std::size_t>();
      n.fp.lcs_dims = x.at("lcs_dims").get<std::vector<std::size_t>>();
      for (const auto& t : x.at("product_dims"))
        n.fp.product_dims[{t.at(0).get<std::size_t>(), t.at(1).get<std::size_t>()}] = t.at(2).get<std::size_t>();
      n.jacobi = x.at("jacobi").get<bool>();
      if (!x.at("figure_level").is_null()) n.figure_level = x.at("figure_level").get<std::size_t>();
      g.nodes.push_back(std::move(n));
    }
    for (const auto& x : j.at("edges"))
      g.edges.push_back({x.at("from").get<std::string>(), x.at("to").get<std::string>(),
                         kind_from(x.at("kind").get<std::string>()), x.at("relies_on_import").get<bool>(),
                         x.at("note").get<std::string>()});
    g.classes = j.at("classes").get<std::vector<std::vector<std::string>>>();
    g.rigid_candidates = j.at("rigid_candidates").get<std::vector<std::string>>();
    g.violations = j.at("violations").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(e.what(), 1, 1);
  }
  return g;
}

}  // namespace dml
