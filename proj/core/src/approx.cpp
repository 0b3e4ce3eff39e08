#include "gog/approx.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace gog {

ApproxRank approx_rank(const std::vector<std::vector<double>>& m, double cutoff) {
  ApproxRank out;
  out.cutoff = cutoff;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  out.nullity = cols;
  if (rows == 0 || cols == 0) return out;

  Eigen::MatrixXd a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(static_cast<long>(i), static_cast<long>(j)) = m[i][j];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sv = svd.singularValues();
  std::size_t r = 0;
  for (long i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++r;
  out.rank = r;
  out.nullity = cols - r;
  return out;
}

} // namespace gog
