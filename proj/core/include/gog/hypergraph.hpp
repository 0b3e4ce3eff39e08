#ifndef GOG_HYPERGRAPH_HPP
#define GOG_HYPERGRAPH_HPP

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace gog {

struct HyperEdge {
  std::string id;
  std::vector<std::string> vertices; // input order, no repeats
};

/// A vertex-edge containment pair v*e, the edge set of the incidence graph.
struct Incidence {
  std::string vertex;
  std::string edge;
  bool operator==(const Incidence&) const = default;
};

/// Combinatorial hypergraph. Ids are opaque strings; every ordering is the
/// input order so all downstream reports are reproducible.
class Hypergraph {
public:
  Hypergraph() = default;
  /// Validates: edge vertices exist and repeat neither within an edge nor as
  /// vertex ids; edge ids unique. Empty edges are rejected unless allowed.
  Hypergraph(std::vector<std::string> vertices, std::vector<HyperEdge> edges,
             bool allow_empty_edges = false);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<HyperEdge>& edges() const { return edges_; }
  bool allows_empty_edges() const { return allow_empty_edges_; }

  bool has_vertex(const std::string& id) const;
  bool has_edge(const std::string& id) const;
  std::size_t vertex_index(const std::string& id) const; // input_error if unknown
  std::size_t edge_index(const std::string& id) const;

  /// Edges containing v, in edge order.
  std::vector<std::string> edges_of(const std::string& vertex) const;

  /// True when every edge has exactly two vertices.
  bool is_two_uniform() const;

private:
  std::vector<std::string> vertices_;
  std::vector<HyperEdge> edges_;
  bool allow_empty_edges_ = false;
};

/// One incidence per (vertex, containing edge) pair: edge order, then the
/// vertex order within the edge.
std::vector<Incidence> incidence_set(const Hypergraph& h);

/// Incidence graph I(h): nodes are V then E (in input order), edges are the
/// incidences. Node indices below refer to this combined ordering.
struct IncidenceGraph {
  std::size_t vertex_count = 0; // nodes [0, vertex_count) are hypergraph vertices
  std::size_t edge_count = 0;   // nodes [vertex_count, vertex_count+edge_count)
  std::vector<std::pair<std::size_t, std::size_t>> links; // one per incidence
  std::vector<std::vector<std::size_t>> adjacency;        // node -> incidence indexes
  std::size_t node_count() const { return vertex_count + edge_count; }
};

IncidenceGraph incidence_graph(const Hypergraph& h);

/// Dual hypergraph: vertices are the edge ids of h; one dual edge per
/// original vertex v, listing the edges containing v. Dual edges are a
/// multiset, disambiguated by suffixing the originating vertex id.
Hypergraph dual(const Hypergraph& h);

/// The dual edge id used for vertex v.
std::string dual_edge_id(const std::string& vertex);

struct SplitResult {
  /// Connected components of the hypergraph induced on V minus removed,
  /// each a vertex list in input order.
  std::vector<std::vector<std::string>> components;
  /// Surviving edges (those inside V minus removed) with their component.
  std::vector<std::pair<std::string, std::size_t>> edge_components;
  bool disconnecting = false;
};

/// Components of h[V - removed] under the path relation "consecutive
/// vertices share an edge". removed must be a subset of the vertices.
SplitResult split_components(const Hypergraph& h, const std::set<std::string>& removed);

} // namespace gog

#endif
