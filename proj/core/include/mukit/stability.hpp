#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mukit/hull.hpp"
#include "mukit/measure.hpp"
#include "mukit/spaces.hpp"

namespace mukit::stability {

using hull::ObjectiveFunction;
using measures::FiniteMeasure;
using spaces::SetDescriptor;

/// Output of the midpoint splitter: (x + y) / 2 == z holds exactly in
/// floating point, by construction of each coordinate pair.
struct SplitResult {
  Vector x;
  Vector y;
  double tau = 0.0;      // tail scaling parameter in [-1, 1]
  Index head_dim = 0;    // coordinates solved by the head LP
  double achieved_eps = 0.0;  // max(||x - a||_p, ||y - b||_p)
};

/// Constructive stability of the l_p simplex: given a segment [a, b] and a
/// point z close to its midpoint, produces a segment [x, y] in the simplex
/// centered exactly at z with endpoints eps-close to a and b. Head
/// coordinates come from a correction LP around the symmetric split, tail
/// coordinates are (1 +/- tau) z with tau found by endpoint check plus
/// bisection on the l1 balance.
SplitResult delta_p_split(double p, const Vector& a, const Vector& b, const Vector& z,
                          double eps);

struct ProbeEntry {
  double eps = 0.0;
  double achieved_eps = 0.0;
  bool success = false;
  double tau = 0.0;
  Index head_dim = 0;
  std::string error;  // set when the splitter rejected the instance
};

struct ProbeReport {
  std::vector<ProbeEntry> entries;
  bool all_success = false;
};

/// Tries to split each z_k of a sequence approaching (a+b)/2, with the
/// per-element eps budget. Simplex-shaped families use the constructive
/// splitter; the other families use a segment-scaling probe.
ProbeReport midpoint_openness_probe(const SetDescriptor& desc, const Vector& a, const Vector& b,
                                    const std::vector<Vector>& z_seq,
                                    const std::vector<double>& eps_schedule);

/// r(delta, z) = (delta^2 - (1 - ||z||^2)) / (delta^2 - (1 - ||z||)^2):
/// the guaranteed mass of the delta-ball around z for any measure on the
/// unit ball with barycenter z. Requires ||z|| <= 1 and ||z|| > 1 - delta.
double ball_bound(double z_norm, double delta);
double ball_bound(const Vector& z, double delta);

struct AdversaryResult {
  double max_outside_mass = 0.0;
  int trials_run = 0;
  int trials_skipped = 0;
  std::optional<FiniteMeasure> best_measure;
  double bound = 0.0;  // 1 - r(delta, z), what the maximum may not exceed
};

/// LP adversary against the ball bound: samples atom sets in the unit ball
/// and maximizes the mass outside the delta-ball subject to barycenter z.
/// The analytic three-atom configuration on a sphere circle (the tight case)
/// is always included.
AdversaryResult ball_bound_adversary(const Vector& z, double delta, int trials,
                                     std::uint64_t seed = kDefaultSeed);

/// The tight configuration itself: mass m/2 on two sphere points at distance
/// exactly delta from z plus mass 1-m on z/||z||, with m = 1 - r(delta, z).
FiniteMeasure two_point_adversary(const Vector& z, double delta);

struct ContinuityEntry {
  double z_norm = 0.0;
  double delta = 0.0;
  double r = 0.0;
  double bound = 0.0;       // eps * r + sup|f| * (1 - r)
  double solver_gap = 0.0;  // |co_f_search(z) - f(x)|
  bool within = false;
};

struct ContinuityConfig {
  std::function<double(double)> modulus;  // eps as a function of the pair distance
  std::vector<double> deltas;             // optional per-element override
  hull::SearchConfig search;
  double slack = 1e-9;
};

/// Hull continuity on the unit ball near a sphere point: evaluates the
/// measure-concentration bound per element and checks the hull solver's gap
/// against it.
std::vector<ContinuityEntry> ball_hull_continuity(const ObjectiveFunction& f,
                                                  const Vector& x_on_sphere,
                                                  const std::vector<Vector>& z_seq,
                                                  const ContinuityConfig& cfg);

struct SeparatorResult {
  hull::AffineWitness a;     // a(y) = <y, x1 - x2>
  std::function<double(const Vector&)> f;  // f = -a^2, concave
  double gap = 0.0;          // f(x0) - (f(x1) + f(x2))/2 = ||x1 - x2||^4 / 4
  double a_x1 = 0.0;
  double a_x2 = 0.0;
};

/// Concave witness separating a proper midpoint from the extreme points:
/// f = -a^2 with an affine a that splits x1 from x2 certifies x0 is not
/// extreme; the midpoint gap is strictly positive.
SeparatorResult extreme_point_separator(const Vector& x0, const Vector& x1, const Vector& x2);

}  // namespace mukit::stability
