#include "dml/degen/graph.hpp"

#include "dml/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dml {

std::string to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Witnessed: return "witnessed";
    case EdgeKind::Imported: return "imported";
    case EdgeKind::Transitive: return "transitive";
  }
  return "?";
}

const GraphNode* DegenerationGraph::node(const std::string& id) const {
  for (const auto& n : nodes)
    if (n.id == id) return &n;
  return nullptr;
}

const GraphEdge* DegenerationGraph::edge(const std::string& from, const std::string& to) const {
  const std::string f = representative(from);
  const std::string t = representative(to);
  for (const auto& e : edges)
    if (e.from == f && e.to == t) return &e;
  return nullptr;
}

std::size_t DegenerationGraph::count(EdgeKind k) const {
  return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [k](const GraphEdge& e) { return e.kind == k; }));
}

std::string DegenerationGraph::representative(const std::string& id) const {
  for (const auto& c : classes)
    if (std::find(c.begin(), c.end(), id) != c.end()) return c.front();
  return id;
}

std::vector<GraphEdge> transitive_closure(const std::vector<std::string>& nodes, std::vector<GraphEdge> edges) {
  const std::size_t n = nodes.size();
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[nodes[i]] = i;

  // reach[i][j]: 0 none, 1 via imported steps somewhere, 2 via witnessed steps only.
  std::vector<std::vector<int>> reach(n, std::vector<int>(n, 0));
  for (const auto& e : edges) {
    const int q = (e.kind == EdgeKind::Imported || e.relies_on_import) ? 1 : 2;
    int& r = reach[idx.at(e.from)][idx.at(e.to)];
    r = std::max(r, q);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!reach[k][j]) continue;
        reach[i][j] = std::max(reach[i][j], std::min(reach[i][k], reach[k][j]));
      }
    }

  std::set<std::pair<std::string, std::string>> present;
  for (const auto& e : edges) present.insert({e.from, e.to});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !reach[i][j] || present.count({nodes[i], nodes[j]})) continue;
      GraphEdge e{nodes[i], nodes[j], EdgeKind::Transitive, reach[i][j] == 1, ""};
      edges.push_back(e);
    }
  std::sort(edges.begin(), edges.end(),
            [](const GraphEdge& a, const GraphEdge& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
  return edges;
}

DegenerationGraph build_graph(std::vector<GraphNode> nodes, const std::vector<CheckedClaim>& claims,
                              const std::vector<std::pair<std::string, std::string>>& isomorphisms) {
  DegenerationGraph g;
  std::sort(nodes.begin(), nodes.end(), [](const GraphNode& a, const GraphNode& b) { return a.id < b.id; });
  g.nodes = std::move(nodes);
  auto known = [&](const std::string& id) { return g.node(id) != nullptr; };

  // Union-find keyed by id; the representative is the first id of the pair that created it.
  std::map<std::string, std::string> parent;
  for (const auto& n : g.nodes) parent[n.id] = n.id;
  auto find = [&](std::string x) {
    while (parent.at(x) != x) x = parent.at(x);
    return x;
  };
  for (const auto& [rep, other] : isomorphisms) {
    if (!known(rep) || !known(other)) throw UnknownId("isomorphism names an unknown node: " + rep + ", " + other);
    const std::string a = find(rep);
    const std::string b = find(other);
    if (a != b) parent[b] = a;
  }
  std::map<std::string, std::vector<std::string>> members;
  for (const auto& n : g.nodes) members[find(n.id)].push_back(n.id);
  for (auto& [rep, list] : members) {
    std::stable_partition(list.begin(), list.end(), [&](const std::string& s) { return s == rep; });
    if (list.size() > 1) g.classes.push_back(list);
  }

  std::vector<std::string> reps;
  for (const auto& [rep, list] : members) reps.push_back(rep);

  std::vector<GraphEdge> edges;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& c : claims) {
    if (!known(c.from) || !known(c.to)) throw UnknownId("claim names an unknown node: " + c.from + " -> " + c.to);
    EdgeKind kind;
    if (is_verified(c.status))
      kind = EdgeKind::Witnessed;
    else if (c.status == ClaimStatus::Unwitnessed)
      kind = EdgeKind::Imported;
    else
      throw UnverifiedClaim("claim " + c.from + " -> " + c.to + " has status " + to_string(c.status));
    const std::string f = find(c.from);
    const std::string t = find(c.to);
    if (f == t) continue;  // improper: both ends are isomorphic
    if (seen.count({f, t})) {
      // Prefer a witnessed record over an imported one for the same pair.
      for (auto& e : edges)
        if (e.from == f && e.to == t && kind == EdgeKind::Witnessed) e.kind = kind;
      continue;
    }
    seen.insert({f, t});
    edges.push_back({f, t, kind, false, c.note});
  }
  g.edges = transitive_closure(reps, std::move(edges));

  for (const auto& e : g.edges) {
    if (e.from == e.to || g.edge(e.to, e.from) != nullptr) {
      g.violations.push_back("cycle through " + e.from + " and " + e.to);
      continue;
    }
    const auto* a = g.node(e.from);
    const auto* b = g.node(e.to);
    if (a->fp.der_dim >= b->fp.der_dim)
      g.violations.push_back(e.from + " -> " + e.to + ": der_dim " + std::to_string(a->fp.der_dim) +
                             " is not below " + std::to_string(b->fp.der_dim));
  }

  std::set<std::string> has_incoming;
  for (const auto& e : g.edges) has_incoming.insert(e.to);
  for (const auto& r : reps)
    if (!has_incoming.count(r)) g.rigid_candidates.push_back(r);
  return g;
}

}  // namespace dml
