#ifndef GOG_MOTIONSPACE_HPP
#define GOG_MOTIONSPACE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gog/realisation.hpp"

namespace gog {

/// One infinitesimal motion: an algebra element per element of V, E, I in
/// canonical order.
using MotionTuple = std::vector<Mat>;

struct MotionReport {
  long dim_A = 0;         // raw solution space
  long dim_kernel_pi = 0; // sum of the per-element algebra dimensions
  long dim_piA = 0;       // dim_A - dim_kernel_pi
  long dim_trivial = 0;   // algebra dim minus the dim of the common intersection
  long dofs = 0;          // dim_piA - dim_trivial
  bool rigid = false;     // dofs == 0
  std::optional<std::vector<MotionTuple>> basis; // of the raw space A, on request
};

/// Assembles and solves the incidence constraint system: one algebra vector
/// per element, and for each incidence i = v*e the rows confining
/// (v_v - v_i) to the vertex algebra and (v_e - v_i) to the edge algebra.
MotionReport motion_space(const Realisation& r, bool with_basis = false);

bool is_infinitesimally_rigid(const Realisation& r);

struct ConstrainedReport {
  long dim_A = 0;
  long dim_kernel_cap_A = 0; // dim of (ker pi) intersected with A
  long dim_piA = 0;
  long lower_bound = 0; // sum of constraint-orbit dimensions minus |E|
};

/// The same system with extra rows confining each vertex variable to its
/// constraint algebra. Constraints are keyed by vertex id; a missing vertex
/// is unconstrained. The quotient map stays the one of the unconstrained
/// realisation, so the kernel has to be intersected with the solution space
/// rather than assumed inside it.
ConstrainedReport constrained_motion_space(const Realisation& r,
                                           const std::map<std::string, Subalgebra>& constraints);

/// Exact membership test: does the tuple satisfy every incidence constraint?
bool is_infinitesimal_motion(const Realisation& r, const MotionTuple& t);

struct ApproxMotionReport {
  long dim_A = 0;
  long dim_piA = 0;
  long dim_trivial = 0;
  long dofs = 0;
  bool rigid = false;
  double cutoff = 1e-9;
};

/// Floating-point variant of motion_space: same system, rank by singular
/// values. Only for inputs that cannot be written exactly; reports carry an
/// "approximate" label downstream.
ApproxMotionReport motion_space_approx(const Realisation& r, double cutoff = 1e-9);

} // namespace gog

#endif
