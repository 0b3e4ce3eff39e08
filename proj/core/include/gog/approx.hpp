#ifndef GOG_APPROX_HPP
#define GOG_APPROX_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace gog {

/// Floating-point rank report. Never feeds the exact verdict path; it only
/// serves inputs that cannot be written as rationals.
struct ApproxRank {
  std::size_t rank = 0;
  std::size_t nullity = 0;
  double cutoff = 1e-9;
  static constexpr const char* label = "approximate";
};

/// Rank by singular values: values <= cutoff count as zero.
ApproxRank approx_rank(const std::vector<std::vector<double>>& m, double cutoff = 1e-9);

} // namespace gog

#endif
