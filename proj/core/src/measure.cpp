#include "mukit/measure.hpp"

#include <cmath>

namespace mukit::measures {

FiniteMeasure::FiniteMeasure(std::vector<Vector> atoms_, Vector weights_)
    : atoms(std::move(atoms_)), weights(std::move(weights_)) {
  validate();
}

FiniteMeasure FiniteMeasure::dirac(Vector x) {
  FiniteMeasure mu;
  mu.atoms.push_back(std::move(x));
  mu.weights = Vector::Ones(1);
  return mu;
}

FiniteMeasure FiniteMeasure::uniform(std::vector<Vector> atoms_) {
  FiniteMeasure mu;
  mu.atoms = std::move(atoms_);
  if (mu.atoms.empty()) throw std::invalid_argument("uniform: empty atom list");
  mu.weights = Vector::Constant(static_cast<Index>(mu.atoms.size()),
                                1.0 / static_cast<double>(mu.atoms.size()));
  mu.validate();
  return mu;
}

void FiniteMeasure::validate() const {
  if (atoms.empty()) throw std::invalid_argument("FiniteMeasure: empty atom list");
  if (weights.size() != static_cast<Index>(atoms.size()))
    throw std::invalid_argument("FiniteMeasure: atom/weight count mismatch");
  if ((weights.array() < -kWeightSumTol).any())
    throw std::invalid_argument("FiniteMeasure: negative weight");
  if (std::abs(weights.sum() - 1.0) > 1e-9)
    throw std::invalid_argument("FiniteMeasure: weights must sum to 1");
  const Index d = atoms.front().size();
  for (const auto& a : atoms)
    if (a.size() != d)
      throw std::invalid_argument("FiniteMeasure: inconsistent atom dimensions");
}

FiniteMeasure FiniteMeasure::deduplicated(double merge_tol, double weight_tol) const {
  FiniteMeasure out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (weights[static_cast<Index>(i)] <= weight_tol) continue;
    bool merged = false;
    for (std::size_t j = 0; j < out.atoms.size(); ++j) {
      if ((out.atoms[j] - atoms[i]).norm() < merge_tol) {
        out.weights[static_cast<Index>(j)] += weights[static_cast<Index>(i)];
        merged = true;
        break;
      }
    }
    if (!merged) {
      out.atoms.push_back(atoms[i]);
      out.weights.conservativeResize(out.weights.size() + 1);
      out.weights[out.weights.size() - 1] = weights[static_cast<Index>(i)];
    }
  }
  if (out.atoms.empty()) {
    // everything pruned (all weights at the floor): keep the heaviest atom
    Index imax;
    weights.maxCoeff(&imax);
    out.atoms.push_back(atoms[static_cast<std::size_t>(imax)]);
    out.weights = Vector::Ones(1);
    return out;
  }
  out.weights /= out.weights.sum();
  return out;
}

Vector barycenter(const FiniteMeasure& mu) {
  if (mu.atoms.empty()) throw std::invalid_argument("barycenter: empty atom list");
  Vector b = Vector::Zero(mu.dim());
  for (std::size_t i = 0; i < mu.atoms.size(); ++i)
    b += mu.weights[static_cast<Index>(i)] * mu.atoms[i];
  return b;
}

FiniteMeasure mix(const FiniteMeasure& mu, const FiniteMeasure& nu, double lambda) {
  if (lambda < 0.0 || lambda > 1.0)
    throw std::invalid_argument("mix: lambda must lie in [0, 1]");
  if (mu.dim() != nu.dim()) throw std::invalid_argument("mix: dimension mismatch");
  FiniteMeasure out;
  out.atoms = mu.atoms;
  out.atoms.insert(out.atoms.end(), nu.atoms.begin(), nu.atoms.end());
  out.weights.resize(mu.size() + nu.size());
  out.weights.head(mu.size()) = lambda * mu.weights;
  out.weights.tail(nu.size()) = (1.0 - lambda) * nu.weights;
  return out;
}

double integrate(const FiniteMeasure& mu, const std::function<double(const Vector&)>& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < mu.atoms.size(); ++i)
    acc += mu.weights[static_cast<Index>(i)] * f(mu.atoms[i]);
  return acc;
}

double mass_outside(const FiniteMeasure& mu, const std::function<bool(const Vector&)>& inside) {
  double acc = 0.0;
  for (std::size_t i = 0; i < mu.atoms.size(); ++i)
    if (!inside(mu.atoms[i])) acc += mu.weights[static_cast<Index>(i)];
  return acc;
}

void ConvexTestFamily::validate() const {
  if (functions.empty()) throw std::invalid_argument("ConvexTestFamily: empty family");
}

std::string to_string(ChoquetVerdict v) {
  switch (v) {
    case ChoquetVerdict::DominatesOnFamily: return "DominatesOnFamily";
    case ChoquetVerdict::DominatedOnFamily: return "DominatedOnFamily";
    case ChoquetVerdict::EqualOnFamily: return "EqualOnFamily";
    case ChoquetVerdict::IncomparableOnFamily: return "IncomparableOnFamily";
  }
  return "?";
}

ChoquetVerdict choquet_compare(const FiniteMeasure& mu, const FiniteMeasure& nu,
                               const ConvexTestFamily& family, double tol) {
  family.validate();
  if (mu.dim() != nu.dim()) return ChoquetVerdict::IncomparableOnFamily;
  if ((barycenter(mu) - barycenter(nu)).norm() > tol)
    return ChoquetVerdict::IncomparableOnFamily;

  bool ge = true, le = true;
  for (const auto& f : family.functions) {
    const double im = integrate(mu, f);
    const double in = integrate(nu, f);
    if (im < in - tol) ge = false;
    if (in < im - tol) le = false;
  }
  if (ge && le) return ChoquetVerdict::EqualOnFamily;
  if (ge) return ChoquetVerdict::DominatesOnFamily;
  if (le) return ChoquetVerdict::DominatedOnFamily;
  return ChoquetVerdict::IncomparableOnFamily;
}

}  // namespace mukit::measures
