#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mukit/common.hpp"

namespace mukit::measures {

/// A probability measure with finitely many atoms. Weights are nonnegative
/// and sum to 1 within 1e-12; atoms share one dimension.
struct FiniteMeasure {
  std::vector<Vector> atoms;
  Vector weights;

  FiniteMeasure() = default;
  FiniteMeasure(std::vector<Vector> atoms_, Vector weights_);

  static FiniteMeasure dirac(Vector x);
  static FiniteMeasure uniform(std::vector<Vector> atoms_);

  Index size() const { return weights.size(); }
  Index dim() const { return atoms.empty() ? 0 : atoms.front().size(); }
  void validate() const;

  /// Merges atoms closer than merge_tol (euclidean), summing weights, and
  /// drops zero-weight atoms. LP backends tend to emit near-duplicates.
  FiniteMeasure deduplicated(double merge_tol = 1e-10, double weight_tol = 0.0) const;
};

constexpr double kWeightSumTol = 1e-12;

/// b(mu) = sum_i pi_i x_i.
Vector barycenter(const FiniteMeasure& mu);

/// lambda * mu + (1 - lambda) * nu as measures: atom lists concatenate,
/// weights scale. Affine in the barycenter.
FiniteMeasure mix(const FiniteMeasure& mu, const FiniteMeasure& nu, double lambda);

/// Integral of f against mu.
double integrate(const FiniteMeasure& mu, const std::function<double(const Vector&)>& f);

/// Total weight of atoms failing the membership predicate.
double mass_outside(const FiniteMeasure& mu, const std::function<bool(const Vector&)>& inside);

/// A finite family of declared-convex test functions; comparison verdicts are
/// always relative to such a family, never to all of P(A).
struct ConvexTestFamily {
  std::vector<std::function<double(const Vector&)>> functions;
  std::vector<std::string> labels;

  void validate() const;
};

enum class ChoquetVerdict {
  DominatesOnFamily,
  DominatedOnFamily,
  EqualOnFamily,
  IncomparableOnFamily
};

std::string to_string(ChoquetVerdict v);

/// Compares int f dmu vs int f dnu over the family. Measures with different
/// barycenters (beyond tol) are incomparable up front: mu > nu forces equal
/// barycenters.
ChoquetVerdict choquet_compare(const FiniteMeasure& mu, const FiniteMeasure& nu,
                               const ConvexTestFamily& family, double tol = 1e-9);

}  // namespace mukit::measures
