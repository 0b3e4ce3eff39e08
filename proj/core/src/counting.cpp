#include "gog/counting.hpp"

#include <algorithm>
#include <set>

#include "gog/errors.hpp"

namespace gog {

std::optional<SparsityProfile> sparsity_profile(const Realisation& r) {
  const Hypergraph& h = r.hypergraph();
  if (h.vertices().empty() || h.edges().empty() || r.incidences().empty()) return std::nullopt;
  SparsityProfile p;
  p.k1 = static_cast<long>(r.vertex_algebra(std::size_t{0}).codim());
  for (std::size_t i = 0; i < h.vertices().size(); ++i)
    if (static_cast<long>(r.vertex_algebra(i).codim()) != p.k1) return std::nullopt;
  p.k2 = static_cast<long>(r.edge_algebra(std::size_t{0}).codim());
  for (std::size_t i = 0; i < h.edges().size(); ++i)
    if (static_cast<long>(r.edge_algebra(i).codim()) != p.k2) return std::nullopt;
  long ci = static_cast<long>(r.incidence_algebra_at(0).codim());
  for (std::size_t i = 0; i < r.incidences().size(); ++i)
    if (static_cast<long>(r.incidence_algebra_at(i).codim()) != ci) return std::nullopt;
  p.lambda = p.k1 + p.k2 - ci;
  return p;
}

MaxwellBound maxwell_bound(const Realisation& r) {
  const Hypergraph& h = r.hypergraph();
  MaxwellBound out;
  long bound = 0;
  for (std::size_t i = 0; i < h.vertices().size(); ++i)
    bound += static_cast<long>(r.vertex_algebra(i).codim());
  for (std::size_t i = 0; i < h.edges().size(); ++i)
    bound += static_cast<long>(r.edge_algebra(i).codim());
  for (std::size_t q = 0; q < r.incidences().size(); ++q) {
    bound += static_cast<long>(r.incidence_algebra_at(q).codim());
    const auto& inc = r.incidences()[q];
    bound -= static_cast<long>(r.vertex_algebra(inc.vertex).codim());
    bound -= static_cast<long>(r.edge_algebra(inc.edge).codim());
  }
  out.bound = bound;
  out.profile = sparsity_profile(r);
  if (out.profile) {
    long closed = out.profile->k1 * static_cast<long>(h.vertices().size()) +
                  out.profile->k2 * static_cast<long>(h.edges().size()) -
                  out.profile->lambda * static_cast<long>(r.incidences().size());
    ensure(closed == bound, "closed-form Maxwell bound disagrees with the general count");
    out.closed_form = closed;
  }
  return out;
}

namespace {

bool global_equality_holds(const Realisation& r, const SparsityProfile& p) {
  long lhs = p.lambda * static_cast<long>(r.incidences().size());
  long rhs = p.k1 * static_cast<long>(r.hypergraph().vertices().size()) +
             p.k2 * static_cast<long>(r.hypergraph().edges().size()) -
             static_cast<long>(r.model().algebra_dim());
  return lhs == rhs;
}

SparsityVerdict evaluate_subset(const Realisation& r, const SparsityProfile& p,
                                const std::vector<std::size_t>& subset) {
  SparsityVerdict v;
  v.subset = subset;
  // precondition: the incidence algebras of the subset intersect to zero
  Subspace common = r.model().algebra();
  for (std::size_t q : subset) {
    if (common.dim() == 0) break;
    common = intersect(common, r.incidence_algebra_at(q).space());
  }
  v.precondition = common.dim() == 0;
  std::set<std::string> vs, es;
  for (std::size_t q : subset) {
    vs.insert(r.incidences()[q].vertex);
    es.insert(r.incidences()[q].edge);
  }
  v.lhs = p.lambda * static_cast<long>(subset.size());
  v.rhs = p.k1 * static_cast<long>(vs.size()) + p.k2 * static_cast<long>(es.size()) -
          static_cast<long>(r.model().algebra_dim());
  v.pass = !v.precondition || v.lhs <= v.rhs;
  return v;
}

} // namespace

SparsityVerdict sparsity_check(const Realisation& r, const std::vector<std::size_t>& subset) {
  auto profile = sparsity_profile(r);
  require(profile.has_value(), "sparsity check needs a constant codimension profile");
  require(global_equality_holds(r, *profile),
          "sparsity check not applicable: the global incidence count is not tight");
  for (std::size_t q : subset)
    require(q < r.incidences().size(), "incidence index out of range");
  return evaluate_subset(r, *profile, subset);
}

SparsityScan sparsity_scan(const Realisation& r, bool vertex_induced, std::size_t max_free_bits) {
  SparsityScan scan;
  auto profile = sparsity_profile(r);
  if (!profile) return scan;
  scan.applicable = true;
  scan.profile = *profile;
  scan.global_equality = global_equality_holds(r, *profile);
  if (!scan.global_equality) return scan;

  const Hypergraph& h = r.hypergraph();
  auto consider = [&](const std::vector<std::size_t>& subset) {
    SparsityVerdict v = evaluate_subset(r, *profile, subset);
    if (!v.precondition) {
      ++scan.skipped;
      return;
    }
    ++scan.checked;
    if (!v.pass) scan.violations.push_back(std::move(v));
  };

  if (vertex_induced) {
    const std::size_t nv = h.vertices().size();
    require(nv <= max_free_bits, "too many vertices for the vertex-induced scan cap");
    for (std::size_t mask = 1; mask < (std::size_t{1} << nv); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t q = 0; q < r.incidences().size(); ++q) {
        const HyperEdge& e = h.edges()[h.edge_index(r.incidences()[q].edge)];
        bool inside = std::all_of(e.vertices.begin(), e.vertices.end(), [&](const std::string& v) {
          return (mask >> h.vertex_index(v)) & 1u;
        });
        if (inside) subset.push_back(q);
      }
      if (!subset.empty()) consider(subset);
    }
  } else {
    const std::size_t ni = r.incidences().size();
    require(ni <= max_free_bits, "too many incidences for the exhaustive scan cap");
    for (std::size_t mask = 0; mask < (std::size_t{1} << ni); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t q = 0; q < ni; ++q)
        if ((mask >> q) & 1u) subset.push_back(q);
      consider(subset);
    }
  }
  return scan;
}

BananaResult banana_flex_test(const Realisation& r, const std::vector<std::string>& cut) {
  BananaResult out;
  require(!cut.empty(), "empty cut");
  std::set<std::string> removed(cut.begin(), cut.end());
  SplitResult split = split_components(r.hypergraph(), removed);
  if (!split.disconnecting) {
    out.status = BananaResult::Status::not_disconnecting;
    out.reason = "the given vertex set does not disconnect the hypergraph";
    return out;
  }

  const GroupModel& model = r.model();
  Subspace witness_space = model.algebra();
  for (const auto& v : cut) witness_space = intersect(witness_space, r.vertex_algebra(v).space());
  if (witness_space.dim() == 0) {
    out.status = BananaResult::Status::no_witness;
    out.reason = "no certificate: the cut stabilisers intersect trivially";
    return out;
  }

  const Hypergraph& h = r.hypergraph();
  const std::size_t m = model.matrix_size();
  Mat w = Mat::from_vector(m, m, witness_space.basis().row(0));

  std::set<std::string> first_component(split.components.front().begin(),
                                        split.components.front().end());
  MotionTuple tuple;
  std::vector<bool> edge_marked(h.edges().size(), false);
  for (const auto& v : h.vertices())
    tuple.push_back(first_component.count(v) ? w : Mat(m, m));
  for (std::size_t ei = 0; ei < h.edges().size(); ++ei) {
    const HyperEdge& e = h.edges()[ei];
    edge_marked[ei] = std::any_of(e.vertices.begin(), e.vertices.end(), [&](const std::string& v) {
      return first_component.count(v) != 0;
    });
    tuple.push_back(edge_marked[ei] ? w : Mat(m, m));
  }
  for (const auto& inc : r.incidences())
    tuple.push_back(edge_marked[h.edge_index(inc.edge)] ? w : Mat(m, m));

  if (!is_infinitesimal_motion(r, tuple)) {
    // can happen when a hyperedge meets several components through the cut
    out.status = BananaResult::Status::inconclusive;
    out.reason = "assembled tuple is not a motion; certificate withheld";
    return out;
  }

  // nontriviality: no single algebra element u has u - tuple_x in every
  // element algebra. One unknown u in algebra coordinates.
  const std::size_t d = model.algebra_dim();
  Mat lhs(0, d);
  std::vector<Rat> rhs_col;
  for (std::size_t t = 0; t < r.element_count(); ++t) {
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < r.element_algebra(t).dim(); ++i)
      rows.push_back(model.algebra().coordinates(r.element_algebra(t).space().basis().row(i)));
    Mat comp = orthogonal_complement_rows(Subspace::from_rows(d, rows));
    std::vector<Rat> tx = model.algebra().coordinates(tuple[t].vectorised());
    for (std::size_t cr = 0; cr < comp.rows(); ++cr) {
      lhs.append_row(comp.row(cr));
      Rat value(0);
      for (std::size_t j = 0; j < d; ++j)
        if (comp.at(cr, j) != 0 && tx[j] != 0) value += comp.at(cr, j) * tx[j];
      rhs_col.push_back(value);
    }
  }
  Mat augmented = lhs;
  {
    Mat rhs_mat(rhs_col.size(), 1);
    for (std::size_t i = 0; i < rhs_col.size(); ++i) rhs_mat.at(i, 0) = rhs_col[i];
    Mat aug(lhs.rows(), d + 1);
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
      for (std::size_t j = 0; j < d; ++j) aug.at(i, j) = lhs.at(i, j);
      aug.at(i, d) = rhs_col[i];
    }
    augmented = std::move(aug);
  }
  bool feasible = rank(augmented) == rank(lhs);
  if (feasible) {
    out.status = BananaResult::Status::inconclusive;
    out.reason = "tuple is equivalent to a trivial motion; certificate withheld";
    return out;
  }

  out.status = BananaResult::Status::certificate;
  out.certificate = FlexCertificate{cut, witness_space.dim(), std::move(w), std::move(tuple)};
  return out;
}

} // namespace gog
