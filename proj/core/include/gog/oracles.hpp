#ifndef GOG_ORACLES_HPP
#define GOG_ORACLES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gog/hypergraph.hpp"
#include "gog/rational.hpp"

namespace gog {

/// Classical rigidity-matrix facts for a bar-joint framework. The oracle
/// keeps its own Gaussian elimination so agreement with the graph-of-groups
/// engine is evidence, not circularity.
struct RigidityOracle {
  std::size_t nullity = 0;         // of the rigidity matrix over Q
  std::size_t affine_span_dim = 0; // k, affine span of the coordinates
  long trivial_dim = 0;            // C(d+1,2) - C(d-k,2)
  bool rigid = false;              // nullity == trivial_dim
};

RigidityOracle rigidity_nullity(const Hypergraph& graph,
                                const std::map<std::string, std::vector<Rat>>& coords, int d);

struct ColouringList {
  long count = 0;
  std::vector<std::vector<int>> colourings; // per vertex, 0-based colours
};

/// Exhaustive proper n-colouring enumeration of a graph.
ColouringList proper_colourings(const Hypergraph& graph, int n);

/// All proper colourings lie in a single orbit under colour permutations.
/// Graphs without any proper colouring count as uniquely colourable
/// (the condition is vacuous); callers that need a realisation never hit
/// this case since building one requires a colouring.
bool unique_colourability_bruteforce(const Hypergraph& graph, int n);

/// The classical count |E| = d|V| - C(d+1,2) with the subset condition
/// |F| <= d|V(F)| - C(d+1,2). Subsets too small to span use the corrected
/// trivial count C(d+1,2) - C(d-k,2) with k = min(d, |V(F)|-1), which is
/// what the condition means below d+1 vertices. Subsets are enumerated
/// exhaustively up to the cap, otherwise only for vertex-induced edge sets.
struct MaxwellCountReport {
  long edge_count = 0;
  long expected_edges = 0; // d|V| - C(d+1,2)
  bool count_tight = false;
  bool subsets_ok = true;
  bool subsets_exhaustive = false;
};

MaxwellCountReport classical_maxwell_count(const Hypergraph& graph, int d,
                                           std::size_t max_free_bits = 20);

/// Brute-force graph homomorphism count gamma -> lambda.
long homomorphism_count_bruteforce(const Hypergraph& gamma, const Hypergraph& lambda);

} // namespace gog

#endif
