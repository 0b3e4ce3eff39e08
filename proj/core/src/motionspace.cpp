#include "gog/motionspace.hpp"

#include "gog/approx.hpp"
#include "gog/errors.hpp"

namespace gog {

namespace {

/// Per-element data in the coordinates of the model algebra.
struct CoordSystem {
  std::size_t algebra_dim;                 // D
  std::vector<Subspace> element_spaces;    // each inside R^D
  std::vector<Mat> complements;            // rows cutting out each space
  std::size_t var_count;                   // element_count * D

  explicit CoordSystem(const Realisation& r) {
    const GroupModel& model = r.model();
    algebra_dim = model.algebra_dim();
    const std::size_t count = r.element_count();
    element_spaces.reserve(count);
    complements.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
      const Subalgebra& a = r.element_algebra(t);
      std::vector<std::vector<Rat>> rows;
      for (std::size_t i = 0; i < a.dim(); ++i)
        rows.push_back(model.algebra().coordinates(a.space().basis().row(i)));
      element_spaces.push_back(Subspace::from_rows(algebra_dim, rows));
      complements.push_back(orthogonal_complement_rows(element_spaces.back()));
    }
    var_count = count * algebra_dim;
  }
};

/// Rows for each incidence: C_x (v_x - v_i) = 0 for x the vertex and edge.
Mat assemble_system(const Realisation& r, const CoordSystem& cs) {
  const std::size_t nv = r.hypergraph().vertices().size();
  const std::size_t ne = r.hypergraph().edges().size();
  const std::size_t d = cs.algebra_dim;
  std::size_t row_count = 0;
  for (std::size_t q = 0; q < r.incidences().size(); ++q) {
    const auto& inc = r.incidences()[q];
    row_count += cs.complements[r.hypergraph().vertex_index(inc.vertex)].rows();
    row_count += cs.complements[nv + r.hypergraph().edge_index(inc.edge)].rows();
  }
  Mat system(row_count, cs.var_count);
  std::size_t row = 0;
  for (std::size_t q = 0; q < r.incidences().size(); ++q) {
    const auto& inc = r.incidences()[q];
    const std::size_t xi[2] = {r.hypergraph().vertex_index(inc.vertex),
                               nv + r.hypergraph().edge_index(inc.edge)};
    const std::size_t ii = nv + ne + q;
    for (std::size_t s = 0; s < 2; ++s) {
      const Mat& comp = cs.complements[xi[s]];
      for (std::size_t cr = 0; cr < comp.rows(); ++cr, ++row)
        for (std::size_t j = 0; j < d; ++j) {
          if (comp.at(cr, j) == 0) continue;
          system.at(row, xi[s] * d + j) = comp.at(cr, j);
          system.at(row, ii * d + j) = -comp.at(cr, j);
        }
    }
  }
  return system;
}

long trivial_dimension(const Realisation& r) {
  const GroupModel& model = r.model();
  Subspace common = model.algebra();
  for (std::size_t t = 0; t < r.element_count() && common.dim() > 0; ++t)
    common = intersect(common, r.element_algebra(t).space());
  return static_cast<long>(model.algebra_dim()) - static_cast<long>(common.dim());
}

MotionTuple tuple_from_coordinates(const Realisation& r, const CoordSystem& cs,
                                   const std::vector<Rat>& coords) {
  const GroupModel& model = r.model();
  const std::size_t d = cs.algebra_dim;
  const std::size_t m = model.matrix_size();
  MotionTuple out;
  for (std::size_t t = 0; t < r.element_count(); ++t) {
    std::vector<Rat> vec(model.vec_dim(), Rat(0));
    for (std::size_t j = 0; j < d; ++j) {
      const Rat& c = coords[t * d + j];
      if (c == 0) continue;
      for (std::size_t a = 0; a < model.vec_dim(); ++a) {
        const Rat& b = model.algebra().basis().at(j, a);
        if (b == 0) continue;
        vec[a] += c * b;
      }
    }
    out.push_back(Mat::from_vector(m, m, vec));
  }
  return out;
}

} // namespace

MotionReport motion_space(const Realisation& r, bool with_basis) {
  CoordSystem cs(r);
  Mat system = assemble_system(r, cs);

  MotionReport rep;
  long sum_dims = 0;
  for (std::size_t t = 0; t < r.element_count(); ++t)
    sum_dims += static_cast<long>(cs.element_spaces[t].dim());

  if (with_basis) {
    Subspace sol = nullspace(system);
    rep.dim_A = static_cast<long>(sol.dim());
    std::vector<MotionTuple> basis;
    for (std::size_t i = 0; i < sol.dim(); ++i)
      basis.push_back(tuple_from_coordinates(r, cs, sol.basis().row(i)));
    rep.basis = std::move(basis);
  } else {
    rep.dim_A = static_cast<long>(cs.var_count) - static_cast<long>(rank(system));
  }

  rep.dim_kernel_pi = sum_dims;
  rep.dim_piA = rep.dim_A - rep.dim_kernel_pi;
  rep.dim_trivial = trivial_dimension(r);
  rep.dofs = rep.dim_piA - rep.dim_trivial;
  ensure(rep.dofs >= 0, "motion space smaller than the trivial motions");
  rep.rigid = rep.dofs == 0;
  return rep;
}

bool is_infinitesimally_rigid(const Realisation& r) { return motion_space(r).rigid; }

ConstrainedReport constrained_motion_space(const Realisation& r,
                                           const std::map<std::string, Subalgebra>& constraints) {
  const GroupModel& model = r.model();
  for (const auto& [v, alg] : constraints) {
    require(r.hypergraph().has_vertex(v), "constraint for unknown vertex " + v);
    require(alg.model() == model, "constraint algebra over the wrong model");
  }

  CoordSystem cs(r);
  const std::size_t d = cs.algebra_dim;
  Mat system = assemble_system(r, cs);

  const std::size_t nv = r.hypergraph().vertices().size();
  const std::size_t ne = r.hypergraph().edges().size();
  std::vector<Subspace> constraint_spaces; // in algebra coordinates, per vertex
  for (std::size_t vi = 0; vi < nv; ++vi) {
    auto it = constraints.find(r.hypergraph().vertices()[vi]);
    if (it == constraints.end()) {
      constraint_spaces.push_back(Subspace::full(d));
      continue;
    }
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < it->second.dim(); ++i)
      rows.push_back(model.algebra().coordinates(it->second.space().basis().row(i)));
    constraint_spaces.push_back(Subspace::from_rows(d, rows));
  }
  for (std::size_t vi = 0; vi < nv; ++vi) {
    Mat comp = orthogonal_complement_rows(constraint_spaces[vi]);
    for (std::size_t cr = 0; cr < comp.rows(); ++cr) {
      std::vector<Rat> row(cs.var_count, Rat(0));
      for (std::size_t j = 0; j < d; ++j) row[vi * d + j] = comp.at(cr, j);
      system.append_row(row);
    }
  }

  ConstrainedReport rep;
  rep.dim_A = static_cast<long>(cs.var_count) - static_cast<long>(rank(system));

  // ker(pi) need not lie inside A here: a vertex algebra vector may leave
  // the constraint space. Intersect component-wise.
  long cap = 0;
  long bound = 0;
  for (std::size_t vi = 0; vi < nv; ++vi) {
    long both = static_cast<long>(intersect(constraint_spaces[vi], cs.element_spaces[vi]).dim());
    cap += both;
    bound += static_cast<long>(constraint_spaces[vi].dim()) - both;
  }
  for (std::size_t t = nv; t < r.element_count(); ++t)
    cap += static_cast<long>(cs.element_spaces[t].dim());
  rep.dim_kernel_cap_A = cap;
  rep.dim_piA = rep.dim_A - cap;
  rep.lower_bound = bound - static_cast<long>(ne);
  ensure(rep.dim_piA >= rep.lower_bound, "constrained motion space beats its lower bound");
  return rep;
}

bool is_infinitesimal_motion(const Realisation& r, const MotionTuple& t) {
  require(t.size() == r.element_count(), "tuple has wrong arity");
  const std::size_t nv = r.hypergraph().vertices().size();
  const std::size_t ne = r.hypergraph().edges().size();
  for (std::size_t q = 0; q < r.incidences().size(); ++q) {
    const auto& inc = r.incidences()[q];
    const std::size_t vi = r.hypergraph().vertex_index(inc.vertex);
    const std::size_t ei = r.hypergraph().edge_index(inc.edge);
    const Mat& ti = t[nv + ne + q];
    if (!r.vertex_algebra(vi).contains(t[vi] - ti)) return false;
    if (!r.edge_algebra(ei).contains(t[nv + ei] - ti)) return false;
  }
  return true;
}

ApproxMotionReport motion_space_approx(const Realisation& r, double cutoff) {
  CoordSystem cs(r);
  Mat system = assemble_system(r, cs);
  std::vector<std::vector<double>> m(system.rows(), std::vector<double>(system.cols(), 0.0));
  for (std::size_t i = 0; i < system.rows(); ++i)
    for (std::size_t j = 0; j < system.cols(); ++j)
      if (system.at(i, j) != 0) m[i][j] = system.at(i, j).get_d();

  ApproxMotionReport rep;
  rep.cutoff = cutoff;
  ApproxRank ar = approx_rank(m, cutoff);
  rep.dim_A = static_cast<long>(cs.var_count) - static_cast<long>(ar.rank);
  long sum_dims = 0;
  for (std::size_t t = 0; t < r.element_count(); ++t)
    sum_dims += static_cast<long>(cs.element_spaces[t].dim());
  rep.dim_piA = rep.dim_A - sum_dims;
  rep.dim_trivial = trivial_dimension(r);
  rep.dofs = rep.dim_piA - rep.dim_trivial;
  rep.rigid = rep.dofs == 0;
  return rep;
}

} // namespace gog
