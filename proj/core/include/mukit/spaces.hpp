#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "mukit/common.hpp"

namespace mukit::spaces {

/// A finite real vector tagged with the exponent of the ambient l_p space.
/// All "infinite" sequences in this library live at an explicit truncation
/// dimension; the dimension is the experiment knob for tail phenomena.
struct Point {
  Vector coords;
  double ambient_p = 2.0;

  Point() = default;
  explicit Point(Vector c, double p = 2.0) : coords(std::move(c)), ambient_p(p) {
    validate();
  }

  Index dim() const { return coords.size(); }
  void validate() const;
};

constexpr double kInfExponent = std::numeric_limits<double>::infinity();

/// (sum |x_i|^p)^(1/p); p = inf gives the max norm. Throws std::domain_error
/// for p < 1.
double lp_norm(const Vector& x, double p);
inline double lp_norm(const Point& x, double p) { return lp_norm(x.coords, p); }

/// Unit vector e_i (1-based index) in dimension n.
Vector canonical_basis(Index i, Index n);

enum class SetFamily {
  L1ConeBounded,            // A_1 = {x >= 0, ||x||_1 <= 1}
  LpConeBounded,            // A_p = {x >= 0, ||x||_p <= 1}, p > 1
  SimplexDeltaP,            // Delta_p = {x >= 0, sum x_i <= 1}, ambient l_p
  HilbertCube,              // H_a = {|x_i| <= a_i}
  UnitBall,                 // B = {||x||_2 <= 1}
  StandardTruncatedSimplex  // {x >= 0, sum x_i <= 1} in plain R^n
};

/// Identifies one convex set from the library's catalogue together with a
/// membership oracle. Default membership tolerance is 1e-9 absolute on each
/// defining inequality (downstream LP round-off accumulates).
struct SetDescriptor {
  SetFamily family = SetFamily::StandardTruncatedSimplex;
  Index dim = 1;
  double p = 2.0;   // exponent for LpConeBounded / SimplexDeltaP
  Vector a;         // side lengths for HilbertCube

  static SetDescriptor l1_cone(Index dim);
  static SetDescriptor lp_cone(double p, Index dim);
  static SetDescriptor simplex_delta_p(double p, Index dim);
  static SetDescriptor hilbert_cube(Vector a);
  static SetDescriptor unit_ball(Index dim);
  static SetDescriptor standard_simplex(Index dim);

  void validate() const;
  std::string family_name() const;
};

constexpr double kMembershipTol = 1e-9;

bool contains(const SetDescriptor& desc, const Vector& x, double tol = kMembershipTol);
inline bool contains(const SetDescriptor& desc, const Point& x, double tol = kMembershipTol) {
  return contains(desc, x.coords, tol);
}

/// Largest violation of the defining inequalities at x (<= 0 means inside).
double membership_violation(const SetDescriptor& desc, const Vector& x);

/// Samples a point of the set (used by solvers as support proposals).
Vector sample_point(const SetDescriptor& desc, std::mt19937_64& rng);

/// Samples from the documented extreme-point set of the family; for the
/// simplex families this is {0, e_i}, for the ball the unit sphere, for the
/// cube the sign corners.
Vector sample_extreme_point(const SetDescriptor& desc, std::mt19937_64& rng);

/// Deterministic list of "anchor" extreme points (0 and the basis vertices
/// where applicable) that solvers always include in support proposals.
std::vector<Vector> anchor_extreme_points(const SetDescriptor& desc, Index max_count);

/// Pulls an arbitrary vector into the set: negative parts are clipped where
/// the family requires nonnegativity, then the point is scaled/clamped until
/// the binding inequality holds.
Vector project_into(const SetDescriptor& desc, Vector x);

}  // namespace mukit::spaces
