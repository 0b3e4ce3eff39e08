#ifndef GOG_FINITE_HPP
#define GOG_FINITE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gog/hypergraph.hpp"

namespace gog {

/// Permutation of {0..degree-1} as its image sequence.
using Perm = std::vector<int>;

Perm perm_compose(const Perm& a, const Perm& b); // a after b: (a o b)(x) = a[b[x]]
Perm perm_inverse(const Perm& a);

/// Finite permutation group with the full element set enumerated, sorted by
/// image sequence (so element 0 is the identity).
class PermGroup {
public:
  static PermGroup symmetric(int degree);
  /// Closure of the generators; input_error past the cap.
  static PermGroup generated(int degree, const std::vector<Perm>& gens,
                             std::size_t cap = 3628800);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }
  std::size_t index_of(const Perm& p) const; // input_error when absent
  std::size_t compose(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const;

  /// Indexes of the permutations fixing the given point.
  std::vector<std::uint32_t> point_stabiliser(int point) const;

private:
  PermGroup(int degree, std::vector<Perm> elements);
  int degree_;
  std::vector<Perm> elements_;
};

/// Subgroups and cosets are sorted element-index sets into one PermGroup.
using ElementSet = std::vector<std::uint32_t>;

bool is_subgroup(const PermGroup& g, const ElementSet& h);
ElementSet intersect_sets(const ElementSet& a, const ElementSet& b);
ElementSet left_coset(const PermGroup& g, std::uint32_t rep, const ElementSet& subgroup);

/// Points of {0..degree-1} fixed by every permutation of the subgroup.
std::vector<int> fix_of_subgroup(const PermGroup& g, const ElementSet& subgroup);

/// Hypergraph realised by explicit subgroups of one permutation group.
struct FiniteRealisation {
  Hypergraph hypergraph;
  PermGroup group;
  std::vector<ElementSet> vertex_groups;    // by vertex index
  std::vector<ElementSet> edge_groups;      // by edge index
  std::vector<ElementSet> incidence_groups; // by incidence index
};

/// Validates subgroup and containment structure; input_error on violations.
FiniteRealisation make_finite_realisation(Hypergraph h, PermGroup g,
                                          std::vector<ElementSet> vertex_groups,
                                          std::vector<ElementSet> edge_groups,
                                          std::vector<ElementSet> incidence_groups);

/// Colour stabiliser realisation in S_n: vertices get the stabiliser of
/// their colour, edges and incidences the pairwise intersections.
/// Requires a proper colouring (colours 1..n) and n >= 3.
FiniteRealisation from_colouring(const Hypergraph& h, const std::map<std::string, int>& colouring,
                                 int n);

/// The covering graph with one node per coset of each vertex/edge subgroup
/// and one edge per coset of each incidence subgroup, fibred over the
/// incidence graph.
struct CosetGraph {
  const FiniteRealisation* realisation = nullptr;
  /// per element of V then E: list of cosets; each coset is a sorted set
  std::vector<std::vector<ElementSet>> fibres;
  /// per element: group element index -> coset position in the fibre
  std::vector<std::vector<std::uint32_t>> coset_of;
  /// per incidence: list of (coset of  rho(i), vertex-coset pos, edge-coset pos)
  struct EdgeClass {
    ElementSet coset;
    std::uint32_t vertex_coset;
    std::uint32_t edge_coset;
  };
  std::vector<std::vector<EdgeClass>> incidence_fibres;
  std::size_t node_count() const;
  std::size_t edge_count() const;
};

CosetGraph coset_graph(const FiniteRealisation& r, std::size_t cap = 3628800);

/// A section of the fibration: one coset choice per vertex/edge element,
/// adjacent elements choosing cosets joined by an edge of the coset graph.
struct Section {
  std::vector<std::uint32_t> choice; // per element, coset position in its fibre
};

/// Complete enumeration by backtracking over the incidence-graph nodes in a
/// breadth-first order from a maximum-degree node. The result is sorted by
/// the choice vectors, so output order is canonical.
std::vector<Section> enumerate_sections(const CosetGraph& x);

/// True when every section is the coset family of a single group element.
bool is_globally_rigid_finite(const FiniteRealisation& r);

/// Sections of the projection from the tensor product of gamma and lambda
/// onto gamma; equals the number of graph homomorphisms gamma -> lambda.
long tensor_sections(const Hypergraph& gamma, const Hypergraph& lambda);

} // namespace gog

#endif
