#include "mukit/spaces.hpp"

#include <algorithm>
#include <cmath>

namespace mukit::spaces {

void Point::validate() const {
  if (coords.size() < 1) throw std::invalid_argument("Point: dimension must be >= 1");
  if (!coords.allFinite()) throw std::invalid_argument("Point: coordinates must be finite");
  if (!(ambient_p >= 1.0)) throw std::domain_error("Point: ambient exponent must satisfy p >= 1");
}

double lp_norm(const Vector& x, double p) {
  if (!(p >= 1.0)) throw std::domain_error("lp_norm: p must satisfy p >= 1");
  if (x.size() == 0) return 0.0;
  const double amax = x.cwiseAbs().maxCoeff();
  if (std::isinf(p) || amax == 0.0) return amax;
  if (p == 1.0) return x.cwiseAbs().sum();
  if (p == 2.0) return x.norm();
  // scale by the max entry so pow() stays in range
  double acc = 0.0;
  for (Index i = 0; i < x.size(); ++i) acc += std::pow(std::abs(x[i]) / amax, p);
  return amax * std::pow(acc, 1.0 / p);
}

Vector canonical_basis(Index i, Index n) {
  if (i < 1 || i > n) throw std::out_of_range("canonical_basis: index out of range");
  Vector e = Vector::Zero(n);
  e[i - 1] = 1.0;
  return e;
}

SetDescriptor SetDescriptor::l1_cone(Index dim) {
  SetDescriptor d;
  d.family = SetFamily::L1ConeBounded;
  d.dim = dim;
  d.p = 1.0;
  d.validate();
  return d;
}

SetDescriptor SetDescriptor::lp_cone(double p, Index dim) {
  SetDescriptor d;
  d.family = SetFamily::LpConeBounded;
  d.dim = dim;
  d.p = p;
  d.validate();
  return d;
}

SetDescriptor SetDescriptor::simplex_delta_p(double p, Index dim) {
  SetDescriptor d;
  d.family = SetFamily::SimplexDeltaP;
  d.dim = dim;
  d.p = p;
  d.validate();
  return d;
}

SetDescriptor SetDescriptor::hilbert_cube(Vector a) {
  SetDescriptor d;
  d.family = SetFamily::HilbertCube;
  d.dim = a.size();
  d.a = std::move(a);
  d.validate();
  return d;
}

SetDescriptor SetDescriptor::unit_ball(Index dim) {
  SetDescriptor d;
  d.family = SetFamily::UnitBall;
  d.dim = dim;
  d.validate();
  return d;
}

SetDescriptor SetDescriptor::standard_simplex(Index dim) {
  SetDescriptor d;
  d.family = SetFamily::StandardTruncatedSimplex;
  d.dim = dim;
  d.validate();
  return d;
}

void SetDescriptor::validate() const {
  if (dim < 1) throw std::invalid_argument("SetDescriptor: dim must be >= 1");
  switch (family) {
    case SetFamily::LpConeBounded:
    case SetFamily::SimplexDeltaP:
      if (!(p > 1.0))
        throw std::invalid_argument("SetDescriptor: family requires p > 1");
      break;
    case SetFamily::HilbertCube:
      if (a.size() != dim || a.size() == 0 || (a.array() <= 0.0).any())
        throw std::invalid_argument("SetDescriptor: Hilbert cube needs strictly positive sides");
      break;
    default:
      break;
  }
}

std::string SetDescriptor::family_name() const {
  switch (family) {
    case SetFamily::L1ConeBounded: return "L1ConeBounded";
    case SetFamily::LpConeBounded: return "LpConeBounded";
    case SetFamily::SimplexDeltaP: return "SimplexDeltaP";
    case SetFamily::HilbertCube: return "HilbertCube";
    case SetFamily::UnitBall: return "UnitBall";
    case SetFamily::StandardTruncatedSimplex: return "StandardTruncatedSimplex";
  }
  return "?";
}

double membership_violation(const SetDescriptor& desc, const Vector& x) {
  if (x.size() != desc.dim)
    throw std::invalid_argument("contains: dimension mismatch");
  const double neg = x.size() ? -x.minCoeff() : 0.0;
  switch (desc.family) {
    case SetFamily::L1ConeBounded:
      return std::max(neg, x.sum() - 1.0);  // x >= 0 makes ||x||_1 = sum x
    case SetFamily::LpConeBounded:
      return std::max(neg, lp_norm(x, desc.p) - 1.0);
    case SetFamily::SimplexDeltaP:
    case SetFamily::StandardTruncatedSimplex:
      return std::max(neg, x.sum() - 1.0);
    case SetFamily::HilbertCube:
      return (x.cwiseAbs() - desc.a).maxCoeff();
    case SetFamily::UnitBall:
      return x.norm() - 1.0;
  }
  return std::numeric_limits<double>::infinity();
}

bool contains(const SetDescriptor& desc, const Vector& x, double tol) {
  return membership_violation(desc, x) <= tol;
}

Vector project_into(const SetDescriptor& desc, Vector x) {
  if (x.size() != desc.dim) throw std::invalid_argument("project_into: dimension mismatch");
  switch (desc.family) {
    case SetFamily::L1ConeBounded:
    case SetFamily::SimplexDeltaP:
    case SetFamily::StandardTruncatedSimplex: {
      x = x.cwiseMax(0.0);
      const double s = x.sum();
      if (s > 1.0) x /= s;
      return x;
    }
    case SetFamily::LpConeBounded: {
      x = x.cwiseMax(0.0);
      const double n = lp_norm(x, desc.p);
      if (n > 1.0) x /= n;
      return x;
    }
    case SetFamily::HilbertCube:
      return x.cwiseMin(desc.a).cwiseMax(-desc.a);
    case SetFamily::UnitBall: {
      const double n = x.norm();
      if (n > 1.0) x /= n;
      return x;
    }
  }
  return x;
}

Vector sample_point(const SetDescriptor& desc, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Vector g(desc.dim);
  for (Index i = 0; i < desc.dim; ++i) g[i] = gauss(rng);
  const double shrink = unif(rng);
  return project_into(desc, (g * shrink).eval());
}

Vector sample_extreme_point(const SetDescriptor& desc, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<Index> pick(0, desc.dim);
  std::uniform_int_distribution<int> coin(0, 1);
  switch (desc.family) {
    case SetFamily::L1ConeBounded:
    case SetFamily::SimplexDeltaP:
    case SetFamily::StandardTruncatedSimplex: {
      // extr = {0, e_1, e_2, ...}
      const Index k = pick(rng);
      return k == 0 ? Vector::Zero(desc.dim).eval() : canonical_basis(k, desc.dim);
    }
    case SetFamily::LpConeBounded: {
      // extr = {0} union the positive part of the unit sphere
      if (pick(rng) == 0) return Vector::Zero(desc.dim);
      Vector g(desc.dim);
      for (Index i = 0; i < desc.dim; ++i) g[i] = std::abs(gauss(rng));
      const double n = lp_norm(g, desc.p);
      return n > 0 ? (g / n).eval() : canonical_basis(1, desc.dim);
    }
    case SetFamily::UnitBall: {
      Vector g(desc.dim);
      for (Index i = 0; i < desc.dim; ++i) g[i] = gauss(rng);
      const double n = g.norm();
      return n > 0 ? (g / n).eval() : canonical_basis(1, desc.dim);
    }
    case SetFamily::HilbertCube: {
      Vector corner(desc.dim);
      for (Index i = 0; i < desc.dim; ++i) corner[i] = coin(rng) ? desc.a[i] : -desc.a[i];
      return corner;
    }
  }
  return Vector::Zero(desc.dim);
}

std::vector<Vector> anchor_extreme_points(const SetDescriptor& desc, Index max_count) {
  std::vector<Vector> out;
  switch (desc.family) {
    case SetFamily::L1ConeBounded:
    case SetFamily::SimplexDeltaP:
    case SetFamily::StandardTruncatedSimplex:
    case SetFamily::LpConeBounded: {
      out.push_back(Vector::Zero(desc.dim));
      for (Index i = 1; i <= desc.dim && static_cast<Index>(out.size()) < max_count; ++i)
        out.push_back(canonical_basis(i, desc.dim));
      break;
    }
    case SetFamily::UnitBall: {
      for (Index i = 1; i <= desc.dim && static_cast<Index>(out.size()) < max_count; ++i) {
        out.push_back(canonical_basis(i, desc.dim));
        if (static_cast<Index>(out.size()) < max_count) out.push_back(-canonical_basis(i, desc.dim));
      }
      break;
    }
    case SetFamily::HilbertCube: {
      out.push_back(desc.a);
      out.push_back(-desc.a);
      break;
    }
  }
  return out;
}

}  // namespace mukit::spaces
