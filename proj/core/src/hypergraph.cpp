#include "gog/hypergraph.hpp"

#include <algorithm>
#include <map>

#include "gog/errors.hpp"

namespace gog {

Hypergraph::Hypergraph(std::vector<std::string> vertices, std::vector<HyperEdge> edges,
                       bool allow_empty_edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)),
      allow_empty_edges_(allow_empty_edges) {
  std::set<std::string> vset;
  for (const auto& v : vertices_)
    require(vset.insert(v).second, "duplicate vertex id: " + v);
  std::set<std::string> eset;
  for (const auto& e : edges_) {
    require(eset.insert(e.id).second, "duplicate edge id: " + e.id);
    require(allow_empty_edges_ || !e.vertices.empty(), "empty hyperedge: " + e.id);
    std::set<std::string> in_edge;
    for (const auto& v : e.vertices) {
      require(vset.count(v) != 0, "edge " + e.id + " references unknown vertex " + v);
      require(in_edge.insert(v).second, "edge " + e.id + " repeats vertex " + v);
    }
  }
}

bool Hypergraph::has_vertex(const std::string& id) const {
  return std::find(vertices_.begin(), vertices_.end(), id) != vertices_.end();
}

bool Hypergraph::has_edge(const std::string& id) const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [&](const HyperEdge& e) { return e.id == id; });
}

std::size_t Hypergraph::vertex_index(const std::string& id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  require(it != vertices_.end(), "unknown vertex id: " + id);
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Hypergraph::edge_index(const std::string& id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].id == id) return i;
  throw input_error("unknown edge id: " + id);
}

std::vector<std::string> Hypergraph::edges_of(const std::string& vertex) const {
  std::vector<std::string> out;
  for (const auto& e : edges_)
    if (std::find(e.vertices.begin(), e.vertices.end(), vertex) != e.vertices.end())
      out.push_back(e.id);
  return out;
}

bool Hypergraph::is_two_uniform() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const HyperEdge& e) { return e.vertices.size() == 2; });
}

std::vector<Incidence> incidence_set(const Hypergraph& h) {
  std::vector<Incidence> out;
  for (const auto& e : h.edges())
    for (const auto& v : e.vertices) out.push_back({v, e.id});
  return out;
}

IncidenceGraph incidence_graph(const Hypergraph& h) {
  IncidenceGraph g;
  g.vertex_count = h.vertices().size();
  g.edge_count = h.edges().size();
  g.adjacency.resize(g.node_count());
  std::size_t k = 0;
  for (const auto& inc : incidence_set(h)) {
    std::size_t a = h.vertex_index(inc.vertex);
    std::size_t b = g.vertex_count + h.edge_index(inc.edge);
    g.links.emplace_back(a, b);
    g.adjacency[a].push_back(k);
    g.adjacency[b].push_back(k);
    ++k;
  }
  return g;
}

std::string dual_edge_id(const std::string& vertex) { return "E(" + vertex + ")"; }

Hypergraph dual(const Hypergraph& h) {
  std::vector<std::string> dual_vertices;
  for (const auto& e : h.edges()) dual_vertices.push_back(e.id);
  std::vector<HyperEdge> dual_edges;
  for (const auto& v : h.vertices())
    dual_edges.push_back({dual_edge_id(v), h.edges_of(v)});
  // isolated original vertices become empty dual edges
  bool any_empty = std::any_of(dual_edges.begin(), dual_edges.end(),
                               [](const HyperEdge& e) { return e.vertices.empty(); });
  return Hypergraph(std::move(dual_vertices), std::move(dual_edges),
                    any_empty || h.allows_empty_edges());
}

SplitResult split_components(const Hypergraph& h, const std::set<std::string>& removed) {
  for (const auto& v : removed)
    require(h.has_vertex(v), "removed set contains unknown vertex: " + v);

  std::vector<std::string> kept;
  for (const auto& v : h.vertices())
    if (removed.count(v) == 0) kept.push_back(v);

  // surviving edges: entirely inside the kept vertex set and nonempty
  std::vector<const HyperEdge*> surviving;
  for (const auto& e : h.edges()) {
    if (e.vertices.empty()) continue;
    bool inside = std::all_of(e.vertices.begin(), e.vertices.end(),
                              [&](const std::string& v) { return removed.count(v) == 0; });
    if (inside) surviving.push_back(&e);
  }

  // union-find over the kept vertices
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < kept.size(); ++i) idx[kept[i]] = i;
  std::vector<std::size_t> parent(kept.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const HyperEdge* e : surviving)
    for (std::size_t i = 1; i < e->vertices.size(); ++i) {
      std::size_t a = find(idx[e->vertices[0]]);
      std::size_t b = find(idx[e->vertices[i]]);
      if (a != b) parent[b] = a;
    }

  SplitResult out;
  std::map<std::size_t, std::size_t> root_to_component;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::size_t r = find(i);
    auto it = root_to_component.find(r);
    if (it == root_to_component.end()) {
      root_to_component[r] = out.components.size();
      out.components.push_back({kept[i]});
    } else {
      out.components[it->second].push_back(kept[i]);
    }
  }
  for (const HyperEdge* e : surviving)
    out.edge_components.emplace_back(e->id, root_to_component[find(idx[e->vertices[0]])]);
  out.disconnecting = out.components.size() >= 2;
  return out;
}

} // namespace gog
