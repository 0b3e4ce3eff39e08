#ifndef GOG_COUNTING_HPP
#define GOG_COUNTING_HPP

#include <optional>
#include <string>
#include <vector>

#include "gog/motionspace.hpp"
#include "gog/realisation.hpp"

namespace gog {

/// Constant codimension pattern of a realisation: k1 for vertices, k2 for
/// edges, and lambda = k1 + k2 - codim(incidence). Only defined when all
/// three are constant across the realisation.
struct SparsityProfile {
  long k1 = 0;
  long k2 = 0;
  long lambda = 0;
};

std::optional<SparsityProfile> sparsity_profile(const Realisation& r);

struct MaxwellBound {
  long bound = 0; // always valid: the general codimension count
  std::optional<SparsityProfile> profile;
  std::optional<long> closed_form; // k1|V| + k2|E| - lambda|I| when the profile exists
};

/// Lower bound on dim_piA from codimension counting over vertices, edges
/// and incidences.
MaxwellBound maxwell_bound(const Realisation& r);

struct SparsityVerdict {
  std::vector<std::size_t> subset; // incidence indexes, ascending
  bool precondition = false;       // the subset algebras intersect to zero
  long lhs = 0;                    // lambda |I'|
  long rhs = 0;                    // k1 |V(I')| + k2 |E(I')| - dim G
  bool pass = false;               // precondition implies lhs <= rhs
};

/// Evaluates the subset inequality for one incidence subset. Requires the
/// profile and the global equality lambda|I| = k1|V| + k2|E| - dim(G);
/// input_error otherwise.
SparsityVerdict sparsity_check(const Realisation& r, const std::vector<std::size_t>& subset);

struct SparsityScan {
  bool applicable = false;   // profile exists
  bool global_equality = false;
  SparsityProfile profile;
  long checked = 0; // subsets whose precondition held
  long skipped = 0; // subsets skipped because the precondition failed
  std::vector<SparsityVerdict> violations;
};

/// Scans incidence subsets: all subsets induced by vertex sets, or every
/// subset of I when vertex_induced is false (capped at 2^max_free_bits).
SparsityScan sparsity_scan(const Realisation& r, bool vertex_induced = true,
                           std::size_t max_free_bits = 20);

struct FlexCertificate {
  std::vector<std::string> cut; // the disconnecting vertex set
  std::size_t witness_dim = 0;  // dim of the common algebra over the cut
  Mat witness;                  // chosen algebra element
  MotionTuple tuple;            // the assembled infinitesimal motion
};

struct BananaResult {
  enum class Status { certificate, not_disconnecting, no_witness, inconclusive };
  Status status = Status::inconclusive;
  std::string reason;
  std::optional<FlexCertificate> certificate;
};

/// Builds the disconnecting-set flex: a common algebra element of the cut
/// spread over one component. Membership in the motion space is verified by
/// substitution and nontriviality by the infeasibility of finding a single
/// algebra element congruent to the tuple.
BananaResult banana_flex_test(const Realisation& r, const std::vector<std::string>& cut);

} // namespace gog

#endif
