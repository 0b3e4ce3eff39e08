#ifndef GOG_REALISATION_HPP
#define GOG_REALISATION_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gog/hypergraph.hpp"
#include "gog/liemodels.hpp"

namespace gog {

// -- geometric instances ------------------------------------------------------

struct BarJointInstance {
  int d = 2;
  std::map<std::string, std::vector<Rat>> coordinates; // vertex -> point
};

struct ProjectiveInstance {
  int n = 3, k = 1, l = 2;
  std::map<std::string, Mat> vertex_subspaces; // k x n bases
  std::map<std::string, Mat> edge_subspaces;   // l x n bases
};

struct SceneInstance {
  int d = 2;
  std::map<std::string, std::vector<Rat>> points; // homogeneous, length d+1
};

struct ParallelInstance {
  int d = 2;
  std::map<std::string, std::vector<Rat>> points; // vertex -> point in R^d
  std::map<std::string, Hyperplane> hyperplanes;  // edge -> hyperplane
};

struct ConstrainedInstance {
  int d = 2;
  std::map<std::string, std::vector<Rat>> coordinates;
  std::map<std::string, AffineSubspace> constraints; // missing vertex = unconstrained
};

struct CustomInstance {
  GroupKind kind = GroupKind::euclidean;
  int parameter = 2;
  std::map<std::string, std::vector<Mat>> vertex_algebras;
  std::map<std::string, std::vector<Mat>> edge_algebras;
  /// keyed "v*e"; omitted incidences default to the intersection
  std::map<std::string, std::vector<Mat>> incidence_algebras;
};

using InstancePayload = std::variant<BarJointInstance, ProjectiveInstance, SceneInstance,
                                     ParallelInstance, ConstrainedInstance, CustomInstance>;

struct Instance {
  Hypergraph hypergraph;
  InstancePayload payload;
};

const char* instance_kind_name(const InstancePayload& payload);
GroupModel model_of(const Instance& inst);

// -- realisations -------------------------------------------------------------

/// Assignment of a subalgebra to every vertex, edge and incidence of a
/// hypergraph over one group model. Every incidence algebra is contained in
/// both endpoint algebras; the default builders make it the intersection.
class Realisation {
public:
  Realisation(Hypergraph h, GroupModel model, std::vector<Subalgebra> vertex_algebras,
              std::vector<Subalgebra> edge_algebras, std::vector<Subalgebra> incidence_algebras,
              std::vector<std::string> warnings = {});

  const Hypergraph& hypergraph() const { return h_; }
  const GroupModel& model() const { return model_; }
  const std::vector<Incidence>& incidences() const { return incidences_; }

  const Subalgebra& vertex_algebra(std::size_t i) const { return vertex_algebras_[i]; }
  const Subalgebra& edge_algebra(std::size_t i) const { return edge_algebras_[i]; }
  const Subalgebra& incidence_algebra_at(std::size_t i) const { return incidence_algebras_[i]; }
  const Subalgebra& vertex_algebra(const std::string& id) const;
  const Subalgebra& edge_algebra(const std::string& id) const;

  /// Elements in canonical order: vertices, edges, incidences.
  std::size_t element_count() const;
  const Subalgebra& element_algebra(std::size_t idx) const;
  std::string element_name(std::size_t idx) const;

  const std::vector<std::string>& warnings() const { return warnings_; }

private:
  Hypergraph h_;
  GroupModel model_;
  std::vector<Incidence> incidences_;
  std::vector<Subalgebra> vertex_algebras_, edge_algebras_, incidence_algebras_;
  std::vector<std::string> warnings_;
};

/// Builds the realisation by the variant's stabiliser recipe. Validates the
/// instance geometry (incidences satisfied, bar endpoints distinct, scene
/// points away from the centre) and throws input_error on violations.
Realisation build(const Instance& inst);

/// Transports a realisation along an algebra isomorphism; optionally
/// relabels onto the dual hypergraph with vertex/edge roles swapped.
/// Motion-space dimensions are preserved.
Realisation pushforward(const Realisation& r, const AlgebraMap& phi, bool dualize_hypergraph);

enum class DualTarget { projective_dual, scene_to_parallel };

/// Emits the geometrically transported instance file content: the dual
/// point/line configuration, or the parallel-redrawing instance polar to a
/// scene instance.
Instance dualize_instance(const Instance& inst, DualTarget target);

} // namespace gog

#endif
