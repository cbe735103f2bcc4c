#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mukit/measure.hpp"
#include "mukit/spaces.hpp"

namespace mukit::hull {

using measures::FiniteMeasure;
using spaces::SetDescriptor;

/// A scalar objective on points of a set. declared_concave unlocks the
/// extreme-point support guarantee; without it (and without declared_convex)
/// results are flagged heuristic.
struct ObjectiveFunction {
  std::function<double(const Vector&)> evaluator;
  bool declared_concave = false;
  bool declared_convex = false;
  double lower_bound = -1e18;
  double upper_bound = 1e18;

  double operator()(const Vector& x) const { return evaluator(x); }
};

/// An affine witness a(y) = <slope, y> + offset with a(x) <= co f(x).
struct AffineWitness {
  Vector slope;
  double offset = 0.0;

  double operator()(const Vector& y) const { return slope.dot(y) + offset; }
};

/// Certified upper bound for co f(x): the decomposition is an explicit
/// finite-support measure with barycenter x whose f-average equals value.
struct HullSolution {
  double value = 0.0;
  FiniteMeasure decomposition;
  std::optional<double> lower_bound;
  std::optional<AffineWitness> lower_witness;
  int iterations = 0;
  int restarts_used = 0;
  bool heuristic = false;
};

struct SearchConfig {
  int restarts = 16;
  std::uint64_t seed = kDefaultSeed;
  double tol = 1e-9;
  int rounds = 6;
  int extreme_samples = 32;
  int perturbations_per_atom = 2;
  double perturb_scale = 0.25;
  std::vector<Vector> warm_atoms;  // extra support proposals (e.g. merged certificates)
  bool fit_lower_bound = false;
  int minorant_samples = 256;
};

/// Exact convex-envelope value of a declared-concave function on a simplex:
/// the envelope is the affine interpolation of vertex values, so it equals
/// sum_i lambda_i f(v_i) at barycentric coordinates lambda.
double co_f_simplex_exact(const std::vector<double>& vertex_values,
                          const std::vector<double>& barycentric_coords,
                          double coord_tol = 1e-9);

/// Upper-bound search for co f(x) over finitely supported decompositions:
/// propose support atoms (extreme points of the set, x itself, perturbations
/// of incumbents), solve the weight LP, prune to a basic support, repeat.
/// The trivial decomposition delta_x is always in the pool, so
/// value <= f(x) holds unconditionally. Deterministic given cfg.seed.
HullSolution co_f_search(const SetDescriptor& desc, const ObjectiveFunction& f,
                         const Vector& x, const SearchConfig& cfg = {});

struct MinorantCheck {
  bool accepted = false;
  double bound = 0.0;             // a(x) when accepted
  double worst_violation = 0.0;   // max over samples of a(y) - f(y)
  std::optional<Vector> witness;  // a sampled point violating a <= f
};

/// Validates a caller-supplied affine minorant a <= f by sampling the set,
/// then reports a(x) as a certified lower bound for co f(x).
MinorantCheck affine_minorant_bound(const SetDescriptor& desc, const ObjectiveFunction& f,
                                    const Vector& x, const AffineWitness& witness,
                                    int samples = 256, std::uint64_t seed = kDefaultSeed,
                                    double tol = 1e-9);

struct LscProbeResult {
  double gap = 0.0;          // value(limit) - min over the tail of value(x_k)
  double limit_value = 0.0;
  std::vector<double> sequence_values;
  std::vector<HullSolution> sequence_solutions;
  HullSolution limit_solution;
};

/// Runs the hull search along a convergent sequence and at its limit. A gap
/// bounded away from zero is numerical evidence that the hull fails lower
/// semicontinuity at the limit.
LscProbeResult lsc_probe(const SetDescriptor& desc, const ObjectiveFunction& f,
                         const std::vector<Vector>& sequence, const Vector& limit,
                         const SearchConfig& cfg = {}, int tail_window = 0);

/// Envelope of a tabulated function: f is known only on the listed points
/// (+infinity elsewhere), so co f(x) is one weight LP over exactly those
/// atoms. Throws SolverFailure when x is not in their convex hull.
HullSolution co_f_table(const std::vector<Vector>& points, const std::vector<double>& values,
                        const Vector& x);

/// f(x) = 1 - ||x||_p: value 1 at the origin, 0 on the canonical basis.
ObjectiveFunction one_minus_norm(double p);

}  // namespace mukit::hull
