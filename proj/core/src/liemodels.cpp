#include "gog/liemodels.hpp"

#include <algorithm>

#include "gog/errors.hpp"

namespace gog {

namespace {

std::size_t binom2(std::size_t n) { return n * (n - 1) / 2; }

// basis matrices of the full algebra per model kind
std::vector<std::vector<Rat>> algebra_generators(GroupKind kind, int p, std::size_t m) {
  std::vector<std::vector<Rat>> rows;
  auto unit = [m](std::size_t i, std::size_t j, const Rat& v, std::vector<Rat>& row) {
    row[i * m + j] = v;
  };
  switch (kind) {
    case GroupKind::euclidean: {
      const std::size_t d = static_cast<std::size_t>(p);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
          std::vector<Rat> row(m * m, Rat(0));
          unit(j, i, 1, row);
          unit(i, j, -1, row);
          rows.push_back(std::move(row));
        }
      for (std::size_t i = 0; i < d; ++i) {
        std::vector<Rat> row(m * m, Rat(0));
        unit(i, d, 1, row);
        rows.push_back(std::move(row));
      }
      break;
    }
    case GroupKind::projective: {
      const std::size_t n = static_cast<std::size_t>(p);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          std::vector<Rat> row(m * m, Rat(0));
          unit(i, j, 1, row);
          rows.push_back(std::move(row));
        }
      for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<Rat> row(m * m, Rat(0));
        unit(i, i, 1, row);
        unit(n - 1, n - 1, -1, row);
        rows.push_back(std::move(row));
      }
      break;
    }
    case GroupKind::scenes: {
      const std::size_t d = static_cast<std::size_t>(p);
      for (std::size_t j = 0; j <= d; ++j) {
        std::vector<Rat> row(m * m, Rat(0));
        unit(d, j, 1, row);
        rows.push_back(std::move(row));
      }
      break;
    }
    case GroupKind::dilation: {
      const std::size_t d = static_cast<std::size_t>(p);
      for (std::size_t i = 0; i <= d; ++i) {
        std::vector<Rat> row(m * m, Rat(0));
        unit(i, d, 1, row);
        rows.push_back(std::move(row));
      }
      break;
    }
  }
  return rows;
}

} // namespace

std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::euclidean: return "euclidean";
    case GroupKind::projective: return "projective";
    case GroupKind::scenes: return "scenes";
    case GroupKind::dilation: return "dilation";
  }
  return "?";
}

GroupModel::GroupModel(GroupKind k, int p) : kind_(k), parameter_(p) {
  matrix_size_ = (k == GroupKind::projective) ? static_cast<std::size_t>(p)
                                              : static_cast<std::size_t>(p) + 1;
  algebra_ = Subspace::from_rows(vec_dim(), algebra_generators(k, p, matrix_size_));
  // dimensions from the construction of each group
  std::size_t expected = 0;
  switch (k) {
    case GroupKind::euclidean: expected = binom2(static_cast<std::size_t>(p) + 1); break;
    case GroupKind::projective: expected = static_cast<std::size_t>(p) * p - 1; break;
    case GroupKind::scenes:
    case GroupKind::dilation: expected = static_cast<std::size_t>(p) + 1; break;
  }
  ensure(algebra_.dim() == expected, "model algebra has unexpected dimension");
}

GroupModel GroupModel::euclidean(int d) {
  require(d >= 1, "euclidean model needs d >= 1");
  return GroupModel(GroupKind::euclidean, d);
}
GroupModel GroupModel::projective(int n) {
  require(n >= 2, "projective model needs n >= 2");
  return GroupModel(GroupKind::projective, n);
}
GroupModel GroupModel::scenes(int d) {
  require(d >= 1, "scenes model needs d >= 1");
  return GroupModel(GroupKind::scenes, d);
}
GroupModel GroupModel::dilation(int d) {
  require(d >= 1, "dilation model needs d >= 1");
  return GroupModel(GroupKind::dilation, d);
}

std::string GroupModel::describe() const {
  return to_string(kind_) + "(" + std::to_string(parameter_) + ")";
}

Subalgebra::Subalgebra(GroupModel model, Subspace space)
    : model_(std::move(model)), space_(std::move(space)) {
  ensure(space_.ambient() == model_.vec_dim(), "subalgebra ambient mismatch");
  ensure(model_.algebra().contains(space_), "subalgebra not inside the model algebra");
}

Mat Subalgebra::basis_matrix(std::size_t i) const {
  return Mat::from_vector(model_.matrix_size(), model_.matrix_size(), space_.basis().row(i));
}

bool Subalgebra::contains(const Mat& m) const { return space_.contains(m.vectorised()); }

bool Subalgebra::contains(const Subalgebra& other) const {
  return model_ == other.model_ && space_.contains(other.space_);
}

bool Subalgebra::bracket_closed() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (!contains(bracket(basis_matrix(i), basis_matrix(j)))) return false;
  return true;
}

Subalgebra full_algebra(const GroupModel& model) { return Subalgebra(model, model.algebra()); }

Subalgebra zero_algebra(const GroupModel& model) {
  return Subalgebra(model, Subspace(model.vec_dim()));
}

Subalgebra subalgebra_from_matrices(const GroupModel& model, const std::vector<Mat>& gens) {
  std::vector<std::vector<Rat>> rows;
  for (const Mat& g : gens) {
    require(g.rows() == model.matrix_size() && g.cols() == model.matrix_size(),
            "generator has wrong matrix size for " + model.describe());
    rows.push_back(g.vectorised());
  }
  Subspace span = Subspace::from_rows(model.vec_dim(), rows);
  require(model.algebra().contains(span),
          "generators leave the " + model.describe() + " algebra");
  Subalgebra out(model, std::move(span));
  require(out.bracket_closed(), "generators do not span a Lie subalgebra");
  return out;
}

namespace {

// one linear functional on the vectorised ambient matrix per condition row
class ConditionRows {
public:
  explicit ConditionRows(std::size_t m) : m_(m) {}
  std::vector<Rat>& fresh() {
    rows_.emplace_back(m_ * m_, Rat(0));
    return rows_.back();
  }
  Rat& coeff(std::vector<Rat>& row, std::size_t i, std::size_t j) { return row[i * m_ + j]; }
  Subspace solution_within(const Subspace& algebra) const {
    if (rows_.empty()) return algebra;
    return intersect(nullspace(Mat::from_rows(rows_)), algebra);
  }

private:
  std::size_t m_;
  std::vector<std::vector<Rat>> rows_;
};

bool all_zero(const std::vector<Rat>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

Subspace euclidean_point_conditions(const GroupModel& model,
                                    const std::vector<std::vector<Rat>>& points) {
  const std::size_t d = static_cast<std::size_t>(model.parameter());
  const std::size_t m = model.matrix_size();
  ConditionRows cond(m);
  for (const auto& pt : points) {
    require(pt.size() == d, "point has wrong dimension for " + model.describe());
    // S p + b = 0, one row per ambient coordinate
    for (std::size_t i = 0; i < d; ++i) {
      auto& row = cond.fresh();
      for (std::size_t j = 0; j < d; ++j) cond.coeff(row, i, j) = pt[j];
      cond.coeff(row, i, d) = 1;
    }
  }
  return cond.solution_within(model.algebra());
}

Subspace projective_subspace_conditions(const GroupModel& model, const Mat& basis) {
  const std::size_t n = model.matrix_size();
  require(basis.rows() == 0 || basis.cols() == n,
          "subspace basis has wrong width for " + model.describe());
  Subspace w = Subspace::from_rows(n, basis);
  require(w.dim() == basis.rows(), "subspace basis rows are dependent");
  if (w.dim() == 0 || w.dim() == n) return model.algebra(); // trivial stabiliser conditions
  Mat comp = orthogonal_complement_rows(w); // (n-k) x n
  ConditionRows cond(n);
  // c . (X w_r) = 0 for every basis vector w_r and complement row c
  for (std::size_t r = 0; r < w.dim(); ++r) {
    std::vector<Rat> wr = w.basis().row(r);
    for (std::size_t ci = 0; ci < comp.rows(); ++ci) {
      auto& row = cond.fresh();
      for (std::size_t i = 0; i < n; ++i) {
        if (comp.at(ci, i) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (wr[j] == 0) continue;
          cond.coeff(row, i, j) += comp.at(ci, i) * wr[j];
        }
      }
    }
  }
  return cond.solution_within(model.algebra());
}

Subspace scene_point_conditions(const GroupModel& model, const std::vector<Rat>& x) {
  const std::size_t d = static_cast<std::size_t>(model.parameter());
  const std::size_t m = model.matrix_size();
  require(x.size() == d + 1, "scene point needs d+1 homogeneous coordinates");
  require(!all_zero(x), "scene point is the zero homogeneous vector");
  bool is_centre = true;
  for (std::size_t j = 0; j < d; ++j)
    if (x[j] != 0) is_centre = false;
  require(!is_centre, "scene point equals the projection centre");
  ConditionRows cond(m);
  auto& row = cond.fresh();
  for (std::size_t j = 0; j <= d; ++j) cond.coeff(row, d, j) = x[j];
  return cond.solution_within(model.algebra());
}

Subspace hyperplane_conditions(const GroupModel& model, const Hyperplane& h) {
  const std::size_t d = static_cast<std::size_t>(model.parameter());
  const std::size_t m = model.matrix_size();
  require(h.normal.size() == d, "hyperplane normal has wrong dimension");
  require(!all_zero(h.normal), "hyperplane normal is zero");
  ConditionRows cond(m);
  // y . (alpha, -c) = 0 on the last column
  auto& row = cond.fresh();
  for (std::size_t i = 0; i < d; ++i) cond.coeff(row, i, d) = h.normal[i];
  cond.coeff(row, d, d) = -h.offset;
  return cond.solution_within(model.algebra());
}

Subspace dilation_point_conditions(const GroupModel& model, const std::vector<Rat>& p) {
  const std::size_t d = static_cast<std::size_t>(model.parameter());
  const std::size_t m = model.matrix_size();
  require(p.size() == d, "point has wrong dimension for " + model.describe());
  // last column confined to span{(p, 1)}
  std::vector<Rat> hom = p;
  hom.push_back(1);
  Mat comp = orthogonal_complement_rows(Subspace::from_rows(d + 1, {hom}));
  ConditionRows cond(m);
  for (std::size_t ci = 0; ci < comp.rows(); ++ci) {
    auto& row = cond.fresh();
    for (std::size_t i = 0; i <= d; ++i) cond.coeff(row, i, d) = comp.at(ci, i);
  }
  return cond.solution_within(model.algebra());
}

[[noreturn]] void incompatible(const GroupModel& model, const char* what) {
  throw input_error(std::string(what) + " is not a " + model.describe() + " object");
}

} // namespace

Subalgebra stabiliser(const GroupModel& model, const GeometricObject& obj) {
  switch (model.kind()) {
    case GroupKind::euclidean:
      if (const auto* pt = std::get_if<EuclideanPoint>(&obj))
        return Subalgebra(model, euclidean_point_conditions(model, {pt->coords}));
      if (const auto* ps = std::get_if<EuclideanPointSet>(&obj))
        return Subalgebra(model, euclidean_point_conditions(model, ps->points));
      incompatible(model, "object");
    case GroupKind::projective:
      if (const auto* w = std::get_if<ProjectiveSubspace>(&obj))
        return Subalgebra(model, projective_subspace_conditions(model, w->basis));
      incompatible(model, "object");
    case GroupKind::scenes:
      if (const auto* s = std::get_if<ScenePoint>(&obj))
        return Subalgebra(model, scene_point_conditions(model, s->homogeneous));
      incompatible(model, "object");
    case GroupKind::dilation:
      if (const auto* h = std::get_if<Hyperplane>(&obj))
        return Subalgebra(model, hyperplane_conditions(model, *h));
      if (const auto* pt = std::get_if<EuclideanPoint>(&obj))
        return Subalgebra(model, dilation_point_conditions(model, pt->coords));
      incompatible(model, "object");
  }
  throw internal_error("unreachable model kind");
}

Subalgebra incidence_algebra(const Subalgebra& a, const Subalgebra& b) {
  require(a.model() == b.model(), "incidence algebra across different models");
  return Subalgebra(a.model(), intersect(a.space(), b.space()));
}

Subalgebra tangency_algebra_affine(const GroupModel& model, const AffineSubspace& space) {
  require(model.kind() == GroupKind::euclidean, "tangency algebra needs a euclidean model");
  const std::size_t d = static_cast<std::size_t>(model.parameter());
  const std::size_t m = model.matrix_size();
  require(space.base.size() == d, "affine base point has wrong dimension");
  Subspace dir = Subspace::from_rows(d, space.directions.rows() == 0 ? Mat(0, d) : space.directions);
  require(dir.dim() == space.directions.rows(), "affine directions are dependent");
  if (dir.dim() == d) return full_algebra(model);
  Mat comp = orthogonal_complement_rows(dir);
  ConditionRows cond(m);
  // c . (S q + b) = 0 and c . (S u_r) = 0 per complement row c
  for (std::size_t ci = 0; ci < comp.rows(); ++ci) {
    auto& row = cond.fresh();
    for (std::size_t i = 0; i < d; ++i) {
      if (comp.at(ci, i) == 0) continue;
      for (std::size_t j = 0; j < d; ++j) cond.coeff(row, i, j) += comp.at(ci, i) * space.base[j];
      cond.coeff(row, i, d) += comp.at(ci, i);
    }
  }
  for (std::size_t r = 0; r < dir.dim(); ++r) {
    std::vector<Rat> u = dir.basis().row(r);
    for (std::size_t ci = 0; ci < comp.rows(); ++ci) {
      auto& row = cond.fresh();
      for (std::size_t i = 0; i < d; ++i) {
        if (comp.at(ci, i) == 0) continue;
        for (std::size_t j = 0; j < d; ++j) cond.coeff(row, i, j) += comp.at(ci, i) * u[j];
      }
    }
  }
  return Subalgebra(model, cond.solution_within(model.algebra()));
}

ProjectivePoint make_projective_point(const Rat& x, const Rat& y, const Rat& z) {
  require(!(x == 0 && y == 0 && z == 0), "zero homogeneous vector");
  ProjectivePoint p{{x, y, z}};
  // scale so the last nonzero coordinate is 1
  Rat s = p.h[2] != 0 ? p.h[2] : (p.h[1] != 0 ? p.h[1] : p.h[0]);
  for (auto& c : p.h) c /= s;
  return p;
}

ProjectivePoint centre_of_rotation(const GroupModel& model, const Mat& w) {
  require(model.kind() == GroupKind::euclidean && model.parameter() == 2,
          "centres of rotation live in euclidean(2)");
  require(model.algebra().contains(w.vectorised()), "not an element of the algebra");
  require(!w.is_zero(), "zero algebra element has no centre");
  const Rat t = w.at(1, 0);
  const Rat b1 = w.at(0, 2);
  const Rat b2 = w.at(1, 2);
  return make_projective_point(-b2, b1, t);
}

Subalgebra rotation_algebra_at(const GroupModel& model, const ProjectivePoint& p) {
  require(model.kind() == GroupKind::euclidean && model.parameter() == 2,
          "centres of rotation live in euclidean(2)");
  Mat g(3, 3);
  g.at(0, 1) = -p.h[2];
  g.at(1, 0) = p.h[2];
  g.at(0, 2) = p.h[1];
  g.at(1, 2) = -p.h[0];
  return Subalgebra(model, Subspace::from_rows(9, {g.vectorised()}));
}

bool centres_collinear(const ProjectivePoint& x, const ProjectivePoint& y,
                       const ProjectivePoint& z) {
  Mat m(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    m.at(0, j) = x.h[j];
    m.at(1, j) = y.h[j];
    m.at(2, j) = z.h[j];
  }
  Rat det = m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
            m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
            m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
  bool by_det = det == 0;

  GroupModel e2 = GroupModel::euclidean(2);
  Subspace s = rotation_algebra_at(e2, x).space();
  s = sum(s, rotation_algebra_at(e2, y).space());
  s = sum(s, rotation_algebra_at(e2, z).space());
  bool distinct = !(x == y) && !(y == z) && !(x == z);
  if (distinct) {
    bool by_dim = s.dim() == 2;
    ensure(by_det == by_dim, "collinearity tests disagree");
  } else {
    ensure(by_det && s.dim() <= 2, "degenerate collinearity case broke");
  }
  return by_det;
}

AlgebraMap::AlgebraMap(GroupModel s, GroupModel t, Mat m)
    : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}

namespace {
Mat neg_transpose_map(std::size_t m) {
  Mat t(m * m, m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t.at(i * m + j, j * m + i) = -1;
  return t;
}
} // namespace

AlgebraMap AlgebraMap::identity(const GroupModel& model) {
  return AlgebraMap(model, model, Mat::identity(model.vec_dim()));
}

AlgebraMap AlgebraMap::projective_duality(int n) {
  GroupModel m = GroupModel::projective(n);
  return AlgebraMap(m, m, neg_transpose_map(m.matrix_size()));
}

AlgebraMap AlgebraMap::scenes_to_dilation(int d) {
  GroupModel s = GroupModel::scenes(d);
  GroupModel t = GroupModel::dilation(d);
  return AlgebraMap(s, t, neg_transpose_map(s.matrix_size()));
}

AlgebraMap AlgebraMap::dilation_to_scenes(int d) {
  GroupModel s = GroupModel::dilation(d);
  GroupModel t = GroupModel::scenes(d);
  return AlgebraMap(s, t, neg_transpose_map(s.matrix_size()));
}

std::vector<Rat> AlgebraMap::apply_vec(const std::vector<Rat>& v) const {
  ensure(v.size() == source_.vec_dim(), "algebra map: input size mismatch");
  std::vector<Rat> out(target_.vec_dim(), Rat(0));
  for (std::size_t i = 0; i < map_.rows(); ++i)
    for (std::size_t j = 0; j < map_.cols(); ++j) {
      if (map_.at(i, j) == 0 || v[j] == 0) continue;
      out[i] += map_.at(i, j) * v[j];
    }
  return out;
}

Mat AlgebraMap::apply_matrix(const Mat& m) const {
  return Mat::from_vector(target_.matrix_size(), target_.matrix_size(),
                          apply_vec(m.vectorised()));
}

Subalgebra AlgebraMap::apply(const Subalgebra& a) const {
  require(a.model() == source_, "algebra map applied to the wrong model");
  std::vector<std::vector<Rat>> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(apply_vec(a.space().basis().row(i)));
  Subspace image = Subspace::from_rows(target_.vec_dim(), rows);
  require(image.dim() == a.dim(), "algebra map collapses the subalgebra");
  return Subalgebra(target_, std::move(image));
}

void AlgebraMap::check_isomorphism() const {
  require(source_.algebra_dim() == target_.algebra_dim(),
          "algebra map between different dimensions");
  std::vector<std::vector<Rat>> rows;
  for (std::size_t i = 0; i < source_.algebra_dim(); ++i)
    rows.push_back(apply_vec(source_.algebra().basis().row(i)));
  Subspace image = Subspace::from_rows(target_.vec_dim(), rows);
  require(image.dim() == source_.algebra_dim() && image == target_.algebra(),
          "algebra map is not an isomorphism onto the target algebra");
}

} // namespace gog
