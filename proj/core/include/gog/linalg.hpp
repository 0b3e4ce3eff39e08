#ifndef GOG_LINALG_HPP
#define GOG_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "gog/rational.hpp"

namespace gog {

/// Dense matrix over the exact rationals, row major.
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<std::vector<Rat>>& rows);
  static Mat vstack(const Mat& top, const Mat& bottom);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Rat> row(std::size_t i) const;
  void append_row(const std::vector<Rat>& r);

  Mat transposed() const;
  Mat operator*(const Mat& rhs) const;
  Mat operator+(const Mat& rhs) const;
  Mat operator-(const Mat& rhs) const;
  Mat operator-() const;
  Mat scaled(const Rat& s) const;

  bool is_zero() const;
  bool operator==(const Mat& rhs) const = default;

  /// Row-major flattening; the bridge between matrices and subspace rows.
  std::vector<Rat> vectorised() const { return a_; }
  static Mat from_vector(std::size_t rows, std::size_t cols, const std::vector<Rat>& v);

private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

/// Commutator AB - BA.
Mat bracket(const Mat& a, const Mat& b);

struct Rref {
  Mat reduced;                  // zero rows dropped
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan over the rationals. Exact; no tolerances.
Rref rref(Mat m);

std::size_t rank(const Mat& m);

/// Linear subspace of R^n in canonical reduced-row-echelon basis, so
/// subspace equality is basis equality.
class Subspace {
public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Reduces the given spanning rows to the canonical basis.
  static Subspace from_rows(std::size_t ambient, const Mat& rows);
  static Subspace from_rows(std::size_t ambient, const std::vector<std::vector<Rat>>& rows);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const std::vector<Rat>& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& rhs) const = default;

  /// Coordinates of a member vector with respect to the canonical basis.
  /// Throws internal_error when v is not in the subspace.
  std::vector<Rat> coordinates(const std::vector<Rat>& v) const;

private:
  std::size_t ambient_;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// Exact kernel {x : m x^T = 0}; dim = cols - rank.
Subspace nullspace(const Mat& m);

/// Both arguments must share the ambient dimension (input_error otherwise).
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// Rows spanning the orthogonal complement of `a` for the standard inner
/// product, so nullspace(orthogonal_complement_rows(a)) == a.
Mat orthogonal_complement_rows(const Subspace& a);

/// Solves x M = rhs for a row vector x, or reports infeasibility.
/// Used for expressing vectors in terms of spanning rows.
std::optional<std::vector<Rat>> solve_row(const Mat& m, const std::vector<Rat>& rhs);

/// True when stacking rhs onto the rows of m does not raise the rank.
bool row_in_span(const Mat& m, const std::vector<Rat>& rhs);

} // namespace gog

#endif
