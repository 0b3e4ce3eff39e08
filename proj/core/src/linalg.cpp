#include "gog/linalg.hpp"

#include <algorithm>

#include "gog/errors.hpp"

namespace gog {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return Mat();
  Mat m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ensure(rows[i].size() == m.cols(), "ragged row list");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::vstack(const Mat& top, const Mat& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  ensure(top.cols() == bottom.cols(), "vstack: column mismatch");
  Mat m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) m.at(i, j) = top.at(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) m.at(top.rows() + i, j) = bottom.at(i, j);
  return m;
}

std::vector<Rat> Mat::row(std::size_t i) const {
  return std::vector<Rat>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

void Mat::append_row(const std::vector<Rat>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  ensure(r.size() == cols_, "append_row: width mismatch");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator*(const Mat& rhs) const {
  ensure(cols_ == rhs.rows_, "matrix product: shape mismatch");
  Mat p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& f = at(i, k);
      if (f == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (rhs.at(k, j) == 0) continue;
        p.at(i, j) += f * rhs.at(k, j);
      }
    }
  return p;
}

Mat Mat::operator+(const Mat& rhs) const {
  ensure(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix sum: shape mismatch");
  Mat s(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + rhs.a_[i];
  return s;
}

Mat Mat::operator-(const Mat& rhs) const {
  ensure(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix difference: shape mismatch");
  Mat s(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - rhs.a_[i];
  return s;
}

Mat Mat::operator-() const {
  Mat s(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = -a_[i];
  return s;
}

Mat Mat::scaled(const Rat& s) const {
  Mat m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x == 0; });
}

Mat Mat::from_vector(std::size_t rows, std::size_t cols, const std::vector<Rat>& v) {
  ensure(v.size() == rows * cols, "from_vector: size mismatch");
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = v[i * cols + j];
  return m;
}

Mat bracket(const Mat& a, const Mat& b) { return a * b - b * a; }

Rref rref(Mat m) {
  Rref out;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    if (m.at(r, c) != 1) {
      Rat inv = Rat(1) / m.at(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m.at(r, j) != 0) m.at(r, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (m.at(r, j) == 0) continue;
        m.at(i, j) -= f * m.at(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  Mat reduced(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) reduced.at(i, j) = m.at(i, j);
  out.reduced = std::move(reduced);
  out.pivots = std::move(pivots);
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).rank(); }

Subspace Subspace::from_rows(std::size_t ambient, const Mat& rows) {
  ensure(rows.rows() == 0 || rows.cols() == ambient, "subspace rows: ambient mismatch");
  Subspace s(ambient);
  Rref r = rref(rows);
  s.basis_ = std::move(r.reduced);
  if (s.basis_.rows() == 0) s.basis_ = Mat(0, ambient);
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::from_rows(std::size_t ambient, const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return Subspace(ambient);
  return from_rows(ambient, Mat::from_rows(rows));
}

Subspace Subspace::full(std::size_t ambient) {
  return from_rows(ambient, Mat::identity(ambient));
}

bool Subspace::contains(const std::vector<Rat>& v) const {
  ensure(v.size() == ambient_, "contains: ambient mismatch");
  // reduce v against the echelon basis
  std::vector<Rat> w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    Rat f = w[pivots_[i]]; // by value: the loop below clears this entry
    if (f == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (basis_.at(i, j) == 0) continue;
      w[j] -= f * basis_.at(i, j);
    }
  }
  return std::all_of(w.begin(), w.end(), [](const Rat& x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::vector<Rat> Subspace::coordinates(const std::vector<Rat>& v) const {
  ensure(contains(v), "coordinates: vector not in subspace");
  // with an RREF basis the coordinates are just the pivot entries
  std::vector<Rat> c(basis_.rows());
  for (std::size_t i = 0; i < basis_.rows(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace nullspace(const Mat& m) {
  const std::size_t n = m.cols();
  Rref r = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> rows;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(n, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced.at(i, f);
    rows.push_back(std::move(v));
  }
  return Subspace::from_rows(n, rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require(a.ambient() == b.ambient(), "intersect: ambient-dimension mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient());
  return nullspace(Mat::vstack(orthogonal_complement_rows(a), orthogonal_complement_rows(b)));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require(a.ambient() == b.ambient(), "sum: ambient-dimension mismatch");
  return Subspace::from_rows(a.ambient(), Mat::vstack(a.basis(), b.basis()));
}

Mat orthogonal_complement_rows(const Subspace& a) {
  if (a.dim() == 0) return Mat::identity(a.ambient());
  return nullspace(a.basis()).basis();
}

std::optional<std::vector<Rat>> solve_row(const Mat& m, const std::vector<Rat>& rhs) {
  // x M = rhs  <=>  M^T x^T = rhs^T; eliminate on [M^T | rhs^T]
  ensure(rhs.size() == m.cols(), "solve_row: shape mismatch");
  Mat aug(m.cols(), m.rows() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(j, i) = m.at(i, j);
  for (std::size_t j = 0; j < m.cols(); ++j) aug.at(j, m.rows()) = rhs[j];
  Rref r = rref(std::move(aug));
  std::vector<Rat> x(m.rows(), Rat(0));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == m.rows()) return std::nullopt; // pivot in rhs column
    x[r.pivots[i]] = r.reduced.at(i, m.rows());
  }
  return x;
}

bool row_in_span(const Mat& m, const std::vector<Rat>& rhs) {
  return solve_row(m, rhs).has_value();
}

} // namespace gog
