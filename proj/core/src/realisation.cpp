#include "gog/realisation.hpp"

#include <algorithm>

#include "gog/errors.hpp"

namespace gog {

const char* instance_kind_name(const InstancePayload& payload) {
  struct Visitor {
    const char* operator()(const BarJointInstance&) const { return "bar_joint"; }
    const char* operator()(const ProjectiveInstance&) const { return "projective"; }
    const char* operator()(const SceneInstance&) const { return "scene"; }
    const char* operator()(const ParallelInstance&) const { return "parallel"; }
    const char* operator()(const ConstrainedInstance&) const { return "constrained"; }
    const char* operator()(const CustomInstance&) const { return "custom"; }
  };
  return std::visit(Visitor{}, payload);
}

GroupModel model_of(const Instance& inst) {
  struct Visitor {
    GroupModel operator()(const BarJointInstance& b) const { return GroupModel::euclidean(b.d); }
    GroupModel operator()(const ProjectiveInstance& p) const { return GroupModel::projective(p.n); }
    GroupModel operator()(const SceneInstance& s) const { return GroupModel::scenes(s.d); }
    GroupModel operator()(const ParallelInstance& p) const { return GroupModel::dilation(p.d); }
    GroupModel operator()(const ConstrainedInstance& c) const { return GroupModel::euclidean(c.d); }
    GroupModel operator()(const CustomInstance& c) const {
      switch (c.kind) {
        case GroupKind::euclidean: return GroupModel::euclidean(c.parameter);
        case GroupKind::projective: return GroupModel::projective(c.parameter);
        case GroupKind::scenes: return GroupModel::scenes(c.parameter);
        case GroupKind::dilation: return GroupModel::dilation(c.parameter);
      }
      throw internal_error("bad custom model kind");
    }
  };
  return std::visit(Visitor{}, inst.payload);
}

Realisation::Realisation(Hypergraph h, GroupModel model, std::vector<Subalgebra> vertex_algebras,
                         std::vector<Subalgebra> edge_algebras,
                         std::vector<Subalgebra> incidence_algebras,
                         std::vector<std::string> warnings)
    : h_(std::move(h)), model_(std::move(model)), incidences_(incidence_set(h_)),
      vertex_algebras_(std::move(vertex_algebras)), edge_algebras_(std::move(edge_algebras)),
      incidence_algebras_(std::move(incidence_algebras)), warnings_(std::move(warnings)) {
  ensure(vertex_algebras_.size() == h_.vertices().size(), "vertex algebra count mismatch");
  ensure(edge_algebras_.size() == h_.edges().size(), "edge algebra count mismatch");
  ensure(incidence_algebras_.size() == incidences_.size(), "incidence algebra count mismatch");
  for (const auto& a : vertex_algebras_) ensure(a.model() == model_, "mixed group models");
  for (const auto& a : edge_algebras_) ensure(a.model() == model_, "mixed group models");
  for (const auto& a : incidence_algebras_) ensure(a.model() == model_, "mixed group models");
  for (std::size_t q = 0; q < incidences_.size(); ++q) {
    const auto& i = incidences_[q];
    const Subalgebra& hv = vertex_algebras_[h_.vertex_index(i.vertex)];
    const Subalgebra& he = edge_algebras_[h_.edge_index(i.edge)];
    require(hv.contains(incidence_algebras_[q]) && he.contains(incidence_algebras_[q]),
            "incidence algebra at " + i.vertex + "*" + i.edge +
                " is not contained in both endpoint algebras");
  }
}

const Subalgebra& Realisation::vertex_algebra(const std::string& id) const {
  return vertex_algebras_[h_.vertex_index(id)];
}

const Subalgebra& Realisation::edge_algebra(const std::string& id) const {
  return edge_algebras_[h_.edge_index(id)];
}

std::size_t Realisation::element_count() const {
  return vertex_algebras_.size() + edge_algebras_.size() + incidence_algebras_.size();
}

const Subalgebra& Realisation::element_algebra(std::size_t idx) const {
  if (idx < vertex_algebras_.size()) return vertex_algebras_[idx];
  idx -= vertex_algebras_.size();
  if (idx < edge_algebras_.size()) return edge_algebras_[idx];
  return incidence_algebras_[idx - edge_algebras_.size()];
}

std::string Realisation::element_name(std::size_t idx) const {
  if (idx < vertex_algebras_.size()) return h_.vertices()[idx];
  idx -= vertex_algebras_.size();
  if (idx < edge_algebras_.size()) return h_.edges()[idx].id;
  const Incidence& i = incidences_[idx - edge_algebras_.size()];
  return i.vertex + "*" + i.edge;
}

namespace {

template <typename M>
const typename M::mapped_type& lookup(const M& m, const std::string& id, const char* what) {
  auto it = m.find(id);
  require(it != m.end(), std::string("missing ") + what + " for " + id);
  return it->second;
}

std::vector<Subalgebra> default_incidences(const Hypergraph& h,
                                           const std::vector<Subalgebra>& vas,
                                           const std::vector<Subalgebra>& eas) {
  std::vector<Subalgebra> out;
  for (const auto& i : incidence_set(h))
    out.push_back(incidence_algebra(vas[h.vertex_index(i.vertex)], eas[h.edge_index(i.edge)]));
  return out;
}

Realisation build_bar_joint(const Hypergraph& h, const BarJointInstance& inst,
                            const GroupModel& model) {
  std::vector<Subalgebra> vas;
  for (const auto& v : h.vertices()) {
    const auto& p = lookup(inst.coordinates, v, "coordinates");
    vas.push_back(stabiliser(model, EuclideanPoint{p}));
  }
  std::vector<Subalgebra> eas;
  for (const auto& e : h.edges()) {
    require(e.vertices.size() == 2, "bar-joint edge " + e.id + " is not a 2-edge");
    const auto& p = lookup(inst.coordinates, e.vertices[0], "coordinates");
    const auto& q = lookup(inst.coordinates, e.vertices[1], "coordinates");
    require(p != q, "bar-joint edge " + e.id + " has coincident endpoints");
    eas.push_back(stabiliser(model, EuclideanPointSet{{p, q}}));
  }
  auto ias = default_incidences(h, vas, eas);
  return Realisation(h, model, std::move(vas), std::move(eas), std::move(ias));
}

Realisation build_projective(const Hypergraph& h, const ProjectiveInstance& inst,
                             const GroupModel& model) {
  const std::size_t n = static_cast<std::size_t>(inst.n);
  require(inst.k >= 0 && inst.l >= 0 && static_cast<std::size_t>(inst.k) <= n &&
              static_cast<std::size_t>(inst.l) <= n,
          "projective instance: k, l out of range");
  std::vector<Subalgebra> vas;
  std::vector<Subspace> w_spaces;
  for (const auto& v : h.vertices()) {
    const Mat& basis = lookup(inst.vertex_subspaces, v, "vertex subspace");
    Subspace w = Subspace::from_rows(n, basis);
    require(w.dim() == static_cast<std::size_t>(inst.k),
            "vertex subspace " + v + " does not have dimension k");
    w_spaces.push_back(w);
    vas.push_back(stabiliser(model, ProjectiveSubspace{basis}));
  }
  std::vector<Subalgebra> eas;
  for (const auto& e : h.edges()) {
    const Mat& basis = lookup(inst.edge_subspaces, e.id, "edge subspace");
    Subspace u = Subspace::from_rows(n, basis);
    require(u.dim() == static_cast<std::size_t>(inst.l),
            "edge subspace " + e.id + " does not have dimension l");
    for (const auto& v : e.vertices)
      require(u.contains(w_spaces[h.vertex_index(v)]),
              "incidence violated: subspace of " + v + " not inside " + e.id);
    eas.push_back(stabiliser(model, ProjectiveSubspace{basis}));
  }
  auto ias = default_incidences(h, vas, eas);
  return Realisation(h, model, std::move(vas), std::move(eas), std::move(ias));
}

Realisation build_scene(const Hypergraph& h, const SceneInstance& inst, const GroupModel& model) {
  std::vector<Subalgebra> vas;
  for (const auto& v : h.vertices())
    vas.push_back(stabiliser(model, ScenePoint{lookup(inst.points, v, "scene point")}));
  // edge algebra: intersection of the point stabilisers over the edge
  std::vector<Subalgebra> eas;
  for (const auto& e : h.edges()) {
    Subalgebra acc = full_algebra(model);
    for (const auto& v : e.vertices) acc = incidence_algebra(acc, vas[h.vertex_index(v)]);
    eas.push_back(std::move(acc));
  }
  auto ias = default_incidences(h, vas, eas);
  return Realisation(h, model, std::move(vas), std::move(eas), std::move(ias));
}

Realisation build_parallel(const Hypergraph& h, const ParallelInstance& inst,
                           const GroupModel& model) {
  const std::size_t d = static_cast<std::size_t>(inst.d);
  std::vector<Subalgebra> eas;
  for (const auto& e : h.edges())
    eas.push_back(stabiliser(model, lookup(inst.hyperplanes, e.id, "hyperplane")));
  std::vector<Subalgebra> vas;
  std::vector<std::string> warnings;
  for (const auto& v : h.vertices()) {
    const auto& p = lookup(inst.points, v, "point");
    require(p.size() == d, "point for " + v + " has wrong dimension");
    auto incident = h.edges_of(v);
    if (incident.empty()) {
      // the intersection over incident edges is empty for isolated
      // vertices; pin them to their point stabiliser instead
      warnings.push_back("isolated vertex " + v + " pinned to the stabiliser of its point");
      vas.push_back(stabiliser(model, EuclideanPoint{p}));
      continue;
    }
    Subalgebra acc = eas[h.edge_index(incident.front())];
    for (std::size_t i = 1; i < incident.size(); ++i)
      acc = incidence_algebra(acc, eas[h.edge_index(incident[i])]);
    vas.push_back(std::move(acc));
  }
  // geometric incidences: p(v) on h(e)
  for (const auto& e : h.edges()) {
    const Hyperplane& hp = inst.hyperplanes.at(e.id);
    for (const auto& v : e.vertices) {
      const auto& p = inst.points.at(v);
      Rat lhs(0);
      for (std::size_t i = 0; i < d; ++i) lhs += hp.normal[i] * p[i];
      require(lhs == hp.offset, "incidence violated: point of " + v + " not on hyperplane of " + e.id);
    }
  }
  auto ias = default_incidences(h, vas, eas);
  return Realisation(h, model, std::move(vas), std::move(eas), std::move(ias), std::move(warnings));
}

Realisation build_constrained(const Hypergraph& h, const ConstrainedInstance& inst,
                              const GroupModel& model) {
  // geometry checks for the constraint spaces; the realisation itself is
  // the bar-joint one, constraints enter in the motion-space solver
  const std::size_t d = static_cast<std::size_t>(inst.d);
  for (const auto& [v, space] : inst.constraints) {
    require(h.has_vertex(v), "constraint for unknown vertex " + v);
    require(space.base.size() == d, "constraint base for " + v + " has wrong dimension");
    const auto& p = lookup(inst.coordinates, v, "coordinates");
    std::vector<Rat> diff(d);
    for (std::size_t i = 0; i < d; ++i) diff[i] = p[i] - space.base[i];
    Subspace dir = Subspace::from_rows(d, space.directions.rows() == 0 ? Mat(0, d) : space.directions);
    require(dir.contains(diff), "vertex " + v + " does not lie in its constraint space");
  }
  BarJointInstance bj{inst.d, inst.coordinates};
  return build_bar_joint(h, bj, model);
}

Realisation build_custom(const Hypergraph& h, const CustomInstance& inst, const GroupModel& model) {
  auto algebra_for = [&](const std::map<std::string, std::vector<Mat>>& m, const std::string& id)
      -> std::optional<Subalgebra> {
    auto it = m.find(id);
    if (it == m.end()) return std::nullopt;
    return subalgebra_from_matrices(model, it->second);
  };
  std::vector<Subalgebra> vas;
  for (const auto& v : h.vertices())
    vas.push_back(algebra_for(inst.vertex_algebras, v).value_or(full_algebra(model)));
  std::vector<Subalgebra> eas;
  for (const auto& e : h.edges())
    eas.push_back(algebra_for(inst.edge_algebras, e.id).value_or(full_algebra(model)));
  std::vector<Subalgebra> ias;
  for (const auto& i : incidence_set(h)) {
    auto given = algebra_for(inst.incidence_algebras, i.vertex + "*" + i.edge);
    if (given) {
      ias.push_back(std::move(*given)); // containment validated by the Realisation ctor
    } else {
      ias.push_back(incidence_algebra(vas[h.vertex_index(i.vertex)], eas[h.edge_index(i.edge)]));
    }
  }
  for (const auto& [key, unused] : inst.incidence_algebras) {
    auto star = key.find('*');
    require(star != std::string::npos, "bad incidence key: " + key);
    std::string v = key.substr(0, star), e = key.substr(star + 1);
    auto incs = incidence_set(h);
    require(std::any_of(incs.begin(), incs.end(),
                        [&](const Incidence& i) { return i.vertex == v && i.edge == e; }),
            "incidence key " + key + " does not name an incidence");
  }
  return Realisation(h, model, std::move(vas), std::move(eas), std::move(ias));
}

} // namespace

Realisation build(const Instance& inst) {
  GroupModel model = model_of(inst);
  struct Visitor {
    const Hypergraph& h;
    const GroupModel& model;
    Realisation operator()(const BarJointInstance& b) const { return build_bar_joint(h, b, model); }
    Realisation operator()(const ProjectiveInstance& p) const {
      return build_projective(h, p, model);
    }
    Realisation operator()(const SceneInstance& s) const { return build_scene(h, s, model); }
    Realisation operator()(const ParallelInstance& p) const { return build_parallel(h, p, model); }
    Realisation operator()(const ConstrainedInstance& c) const {
      return build_constrained(h, c, model);
    }
    Realisation operator()(const CustomInstance& c) const { return build_custom(h, c, model); }
  };
  return std::visit(Visitor{inst.hypergraph, model}, inst.payload);
}

Realisation pushforward(const Realisation& r, const AlgebraMap& phi, bool dualize_hypergraph) {
  require(phi.source() == r.model(), "pushforward: map source does not match the realisation");
  phi.check_isomorphism();

  const Hypergraph& h = r.hypergraph();
  if (!dualize_hypergraph) {
    std::vector<Subalgebra> vas, eas, ias;
    for (std::size_t i = 0; i < h.vertices().size(); ++i) vas.push_back(phi.apply(r.vertex_algebra(i)));
    for (std::size_t i = 0; i < h.edges().size(); ++i) eas.push_back(phi.apply(r.edge_algebra(i)));
    for (std::size_t i = 0; i < r.incidences().size(); ++i)
      ias.push_back(phi.apply(r.incidence_algebra_at(i)));
    return Realisation(h, phi.target(), std::move(vas), std::move(eas), std::move(ias));
  }

  Hypergraph hd = dual(h);
  // dual vertices are the original edges, dual edges the original vertices
  std::vector<Subalgebra> vas, eas;
  for (std::size_t i = 0; i < h.edges().size(); ++i) vas.push_back(phi.apply(r.edge_algebra(i)));
  for (std::size_t i = 0; i < h.vertices().size(); ++i) eas.push_back(phi.apply(r.vertex_algebra(i)));
  // dual incidence (e, E(v)) corresponds to the original incidence (v, e)
  std::map<std::pair<std::string, std::string>, std::size_t> original_index;
  for (std::size_t q = 0; q < r.incidences().size(); ++q)
    original_index[{r.incidences()[q].vertex, r.incidences()[q].edge}] = q;
  std::vector<Subalgebra> ias;
  for (const auto& i : incidence_set(hd)) {
    // i.vertex is an original edge id, i.edge is E(v)
    std::string v = i.edge.substr(2, i.edge.size() - 3); // strip "E(" and ")"
    auto it = original_index.find({v, i.vertex});
    ensure(it != original_index.end(), "dual incidence without original");
    ias.push_back(phi.apply(r.incidence_algebra_at(it->second)));
  }
  return Realisation(std::move(hd), phi.target(), std::move(vas), std::move(eas), std::move(ias));
}

namespace {

Instance dualize_projective(const Instance& inst, const ProjectiveInstance& p) {
  const std::size_t n = static_cast<std::size_t>(p.n);
  Hypergraph hd = dual(inst.hypergraph);
  ProjectiveInstance out;
  out.n = p.n;
  out.k = p.n - p.l;
  out.l = p.n - p.k;
  for (const auto& e : inst.hypergraph.edges())
    out.vertex_subspaces[e.id] =
        orthogonal_complement_rows(Subspace::from_rows(n, p.edge_subspaces.at(e.id)));
  for (const auto& v : inst.hypergraph.vertices())
    out.edge_subspaces[dual_edge_id(v)] =
        orthogonal_complement_rows(Subspace::from_rows(n, p.vertex_subspaces.at(v)));
  return Instance{std::move(hd), std::move(out)};
}

Instance dualize_scene(const Instance& inst, const SceneInstance& s) {
  const std::size_t d = static_cast<std::size_t>(s.d);
  Hypergraph hd = dual(inst.hypergraph);
  ParallelInstance out;
  out.d = s.d;
  // each original edge becomes a vertex located at the pole of the
  // hyperplane spanned by its scene points
  for (const auto& e : inst.hypergraph.edges()) {
    Mat rows(0, d + 1);
    for (const auto& v : e.vertices) rows.append_row(s.points.at(v));
    Subspace sol = nullspace(rows);
    require(sol.dim() == 1, "scene edge " + e.id + " does not span a hyperplane");
    std::vector<Rat> alpha = sol.basis().row(0);
    require(alpha[d] != 0,
            "scene edge " + e.id + " spans a hyperplane through the projection centre");
    std::vector<Rat> point(d);
    for (std::size_t i = 0; i < d; ++i) point[i] = alpha[i] / alpha[d];
    out.points[e.id] = std::move(point);
  }
  // each original vertex becomes the hyperplane polar to its scene point
  for (const auto& v : inst.hypergraph.vertices()) {
    const auto& x = s.points.at(v);
    require(x.size() == d + 1, "scene point for " + v + " has wrong length");
    Hyperplane hp;
    hp.normal.assign(x.begin(), x.begin() + static_cast<long>(d));
    hp.offset = -x[d];
    bool zero = std::all_of(hp.normal.begin(), hp.normal.end(), [](const Rat& c) { return c == 0; });
    require(!zero, "scene point for " + v + " equals the projection centre");
    out.hyperplanes[dual_edge_id(v)] = std::move(hp);
  }
  return Instance{std::move(hd), std::move(out)};
}

} // namespace

Instance dualize_instance(const Instance& inst, DualTarget target) {
  switch (target) {
    case DualTarget::projective_dual: {
      const auto* p = std::get_if<ProjectiveInstance>(&inst.payload);
      require(p != nullptr, "projective-dual needs a projective instance");
      return dualize_projective(inst, *p);
    }
    case DualTarget::scene_to_parallel: {
      const auto* s = std::get_if<SceneInstance>(&inst.payload);
      require(s != nullptr, "scene-to-parallel needs a scene instance");
      return dualize_scene(inst, *s);
    }
  }
  throw internal_error("unreachable dual target");
}

} // namespace gog
