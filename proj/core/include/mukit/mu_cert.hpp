#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mukit/measure.hpp"
#include "mukit/spaces.hpp"

namespace mukit::cert {

using measures::FiniteMeasure;

/// Thrown when a declared certificate family member turns out negative on a
/// probed point.
class CertificateViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Affine functional f_h(x) = <h, x> + offset, the workhorse certificate
/// shape: nonnegative on the set and with compact sublevel truncations.
struct AffineCertificate {
  Vector h;
  double offset = 0.0;
  std::string label;

  double operator()(const Vector& x) const { return h.dot(x) + offset; }
};

struct CertificateFamily {
  std::vector<AffineCertificate> members;

  /// Probes every member for nonnegativity on sampled points of the set.
  void validate_nonnegative(const spaces::SetDescriptor& desc, int samples,
                            std::uint64_t seed = kDefaultSeed, double tol = 1e-9) const;
};

/// A concrete violation of the tail-mass criterion: a point, a decomposition
/// of it, and the weight that escapes every candidate compact built from the
/// first excluded_prefix basis directions.
struct Witness {
  Vector point;
  FiniteMeasure decomposition;
  Index excluded_prefix = 0;
  double outside_mass = 0.0;
};

struct TailCheckResult {
  bool passed = false;
  double outside_mass = 0.0;
  double threshold = 0.0;  // sublevel bound defining the candidate compact
  std::optional<Witness> witness;
};

/// Markov-style sufficiency check: with c = fam(x) and K = {fam <= c/eps},
/// every decomposition of x must place mass <= eps outside K. Throws
/// CertificateViolation if fam goes negative on an atom (or at x).
TailCheckResult tail_certificate_check(const AffineCertificate& fam_member, const Vector& x,
                                       const FiniteMeasure& mu, double eps, double tol = 1e-9);

struct DeltaPRefutation {
  Witness witness;
  int block_index = 0;
  Index block_start = 0;  // 1-based coordinate index
  Index block_length = 0;
  double in_block_power_sum = 0.0;  // sum z_i^p, must be <= 1/r
  std::vector<Index> layout_starts;  // starts n_rho of the block layout, rho = 1..r+1
};

/// Constructs the block witness showing the l_p simplex is not mu-compact:
/// block r has length ceil(r^(1/(p-1))) and uniform entries 1/length, so the
/// block sums to 1 while its p-power sum stays below 1/r. The whole unit of
/// mass sits on basis vectors past prefix_N. Throws ResizeRequired when dim
/// cannot host the block.
DeltaPRefutation delta_p_refute(double p, int r, double eps, Index prefix_N, Index dim);

struct ApRefutation {
  Witness witness;
  Index r = 0;          // number of split-off coordinates
  double s = 0.0;       // mass moved onto tail basis vectors, in (1/3, 2/3)
  double point_norm_p = 0.0;
  double rescaled_norm_p = 0.0;  // norm of x_bar / (1-s), must be <= 1
};

/// Harmonic-tail witness showing the bounded positive l_p cone (p > 1) is
/// not pointwise mu-compact: x = c*(1/i) with ||x||_p < 1/3 splits as
/// (1-s) * (x_bar/(1-s)) + sum x_i e_i with s in (1/3, 2/3) past any prefix.
/// Pass c = NaN to pick it automatically.
ApRefutation ap_refute(double p, Index prefix_N, Index dim,
                       double c = std::numeric_limits<double>::quiet_NaN());

struct CubeBlock {
  Index first = 0;  // 1-based, inclusive
  Index last = 0;
  double sum_sq = 0.0;  // sum of a_i^2 over the block, >= 1
};

/// b_n = sum over the block of a_i e_i.
Vector cube_block_vector(const Vector& a, const CubeBlock& block);

enum class CubeVerdict { CompactCertificate, RefutationBlocks, Inconclusive };

struct CubeClassification {
  CubeVerdict verdict = CubeVerdict::Inconclusive;
  std::vector<double> tail_norms;   // suffix l2 norms of a (compact case)
  std::vector<CubeBlock> blocks;    // greedy unit-energy blocks (refutation case)
  double suffix_energy = 0.0;       // sum a_i^2 over the checked tail window
};

/// Hilbert-cube alternative at truncation a.size(): a summable-tail
/// certificate, a list of unit-energy blocks, or an honest Inconclusive.
CubeClassification hilbert_cube_classify(const Vector& a, double tol = 1e-9);

enum class ConeKind { Pointed, ContainsLine, Inconclusive };

struct ConeClassification {
  ConeKind kind = ConeKind::Inconclusive;
  Vector axis;            // Pointed: <g/||g||, axis> >= 1 for every generator
  Vector line_direction;  // ContainsLine: both +/- direction lie in the cone
  Vector neg_reconstruction;  // conic coefficients writing -direction in the generators
  Index line_generator = -1;

  /// K_eps for a compact embedded in the truncated cone C_r:
  /// K_eps = {x in C : <x, axis> <= r/eps}.
  double truncation_threshold(double r, double eps) const { return r / eps; }
};

/// Decides pointedness of cone(generators) by the axis feasibility LP
/// <g_j/||g_j||, a> >= 1; on infeasibility extracts a line direction from a
/// nontrivial vanishing conic combination.
ConeClassification pointed_cone_classify(const std::vector<Vector>& generators,
                                         double tol = 1e-9);

struct EquivalenceReport {
  bool contained_in_pointed_cone = false;  // via the axis LP
  bool has_extreme_point = false;          // offset vertex test, per-generator LPs
  bool line_free = false;                  // lineality feasibility LP
  bool polar_has_interior = false;         // Chebyshev-ball LP in the polar
  bool consistent = false;
  double polar_ball_radius = 0.0;
};

/// Evaluates the four classical equivalent properties of offset + cone(G)
/// through four independent LP routes and reports whether they agree.
EquivalenceReport polyhedral_equivalence_check(const std::vector<Vector>& generators,
                                               const Vector& offset, double tol = 1e-7);

}  // namespace mukit::cert
