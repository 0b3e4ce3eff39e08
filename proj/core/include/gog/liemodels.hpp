#ifndef GOG_LIEMODELS_HPP
#define GOG_LIEMODELS_HPP

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "gog/linalg.hpp"

namespace gog {

enum class GroupKind { euclidean, projective, scenes, dilation };

std::string to_string(GroupKind k);

/// A concrete matrix model of one of the four transformation groups.
///
///   euclidean(d)  homogeneous (d+1)x(d+1) matrices [S b; 0 0], S skew
///   projective(n) traceless n x n matrices (representatives of pgl(n))
///   scenes(d)     (d+1)x(d+1) matrices with only the last row nonzero
///   dilation(d)   (d+1)x(d+1) matrices with only the last column nonzero
///
/// The scenes and dilation algebras are the last-row / last-column
/// normalisations of their classes inside pgl(d+1), which is what makes the
/// transpose duality between them a literal map of representatives.
class GroupModel {
public:
  static GroupModel euclidean(int d);
  static GroupModel projective(int n);
  static GroupModel scenes(int d);
  static GroupModel dilation(int d);

  GroupKind kind() const { return kind_; }
  int parameter() const { return parameter_; } // d, or n for projective
  std::size_t matrix_size() const { return matrix_size_; }
  std::size_t vec_dim() const { return matrix_size_ * matrix_size_; }
  std::size_t algebra_dim() const { return algebra_.dim(); }
  /// Full Lie algebra as a subspace of the vectorised ambient matrices.
  const Subspace& algebra() const { return algebra_; }

  bool operator==(const GroupModel& rhs) const {
    return kind_ == rhs.kind_ && parameter_ == rhs.parameter_;
  }

  std::string describe() const;

private:
  GroupModel(GroupKind k, int p);
  GroupKind kind_;
  int parameter_;
  std::size_t matrix_size_;
  Subspace algebra_{0};
};

/// A linear subspace of a model's Lie algebra, stored as the canonical
/// row basis of vectorised matrices.
class Subalgebra {
public:
  Subalgebra(GroupModel model, Subspace space);

  const GroupModel& model() const { return model_; }
  const Subspace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  std::size_t codim() const { return model_.algebra_dim() - space_.dim(); }

  Mat basis_matrix(std::size_t i) const; // i-th basis row as a matrix
  bool contains(const Mat& m) const;
  bool contains(const Subalgebra& other) const;
  bool operator==(const Subalgebra& rhs) const {
    return model_ == rhs.model_ && space_ == rhs.space_;
  }

  /// [b_i, b_j] stays in the span for all basis pairs.
  bool bracket_closed() const;

private:
  GroupModel model_;
  Subspace space_;
};

/// Full algebra of the model as a Subalgebra.
Subalgebra full_algebra(const GroupModel& model);
Subalgebra zero_algebra(const GroupModel& model);

/// Span of explicit matrices; validates containment in the model algebra
/// and bracket closure (both input errors, for user-supplied data).
Subalgebra subalgebra_from_matrices(const GroupModel& model, const std::vector<Mat>& gens);

// -- geometric objects ------------------------------------------------------

struct EuclideanPoint {
  std::vector<Rat> coords; // length d
};
struct EuclideanPointSet {
  std::vector<std::vector<Rat>> points;
};
struct ProjectiveSubspace {
  Mat basis; // k x n, independent rows spanning a k-dim subspace of R^n
};
struct ScenePoint {
  std::vector<Rat> homogeneous; // length d+1, nonzero, not the centre Z
};
struct Hyperplane {
  std::vector<Rat> normal; // alpha, length d, not all zero
  Rat offset;              // c in alpha . x = c
};
struct AffineSubspace {
  std::vector<Rat> base;
  Mat directions; // rows independent, possibly none (a single point)
};

using GeometricObject = std::variant<EuclideanPoint, EuclideanPointSet, ProjectiveSubspace,
                                     ScenePoint, Hyperplane, AffineSubspace>;

/// Lie algebra of the stabiliser of obj under the model group, as the exact
/// solution space of the model-specific tangency conditions.
Subalgebra stabiliser(const GroupModel& model, const GeometricObject& obj);

/// Exact intersection; models must agree.
Subalgebra incidence_algebra(const Subalgebra& a, const Subalgebra& b);

/// Infinitesimal preservers of an affine subspace under euclidean(d):
/// {[S b; 0 0] : S x + b in dir(L) for all x in L}.
Subalgebra tangency_algebra_affine(const GroupModel& model, const AffineSubspace& space);

// -- centres of rotation (euclidean(2)) --------------------------------------

/// Point of RP^2 scaled so the last nonzero coordinate is 1.
struct ProjectivePoint {
  std::array<Rat, 3> h;
  bool operator==(const ProjectivePoint&) const = default;
};

ProjectivePoint make_projective_point(const Rat& x, const Rat& y, const Rat& z);

/// The point of RP^2 whose one-dimensional stabiliser algebra is span{w}:
/// rotations map to their fixed point, translations to a point at infinity.
ProjectivePoint centre_of_rotation(const GroupModel& model, const Mat& w);

/// Inverse of the correspondence above.
Subalgebra rotation_algebra_at(const GroupModel& model, const ProjectivePoint& p);

/// Homogeneous determinant test, cross-checked against the dimension of the
/// sum of the three attached algebras.
bool centres_collinear(const ProjectivePoint& x, const ProjectivePoint& y,
                       const ProjectivePoint& z);

// -- algebra homomorphisms ---------------------------------------------------

/// Linear map between model algebras, given on vectorised matrices. The
/// built-in maps are the identity and the transpose dualities.
class AlgebraMap {
public:
  static AlgebraMap identity(const GroupModel& model);
  /// X -> -X^T on traceless matrices; sends Stab(W) to Stab(W-perp).
  static AlgebraMap projective_duality(int n);
  /// X -> -X^T from the scenes algebra onto the dilation algebra.
  static AlgebraMap scenes_to_dilation(int d);
  /// X -> -X^T from the dilation algebra onto the scenes algebra.
  static AlgebraMap dilation_to_scenes(int d);

  const GroupModel& source() const { return source_; }
  const GroupModel& target() const { return target_; }

  std::vector<Rat> apply_vec(const std::vector<Rat>& v) const;
  Mat apply_matrix(const Mat& m) const;
  Subalgebra apply(const Subalgebra& a) const;

  /// The map restricted to the source algebra is a bijection onto the
  /// target algebra. input_error when the rank check fails.
  void check_isomorphism() const;

private:
  AlgebraMap(GroupModel s, GroupModel t, Mat m);
  GroupModel source_, target_;
  Mat map_; // vec_dim(target) x vec_dim(source)
};

} // namespace gog

#endif
