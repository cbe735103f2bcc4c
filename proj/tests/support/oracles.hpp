#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "mukit/common.hpp"

namespace mukit::testing {

// 0 in conv(points) by exhaustive simplex enumeration (Caratheodory: it is
// enough to scan subsets of size <= d + 1). Intended for d <= 3.
inline bool zero_in_hull_bruteforce(const std::vector<Vector>& points, double tol = 1e-9) {
  const Index d = points.front().size();
  const std::size_t n = points.size();
  const std::size_t subset_size = static_cast<std::size_t>(d) + 1;

  std::vector<std::size_t> idx(subset_size);
  const std::function<bool(std::size_t, std::size_t)> scan = [&](std::size_t start,
                                                                 std::size_t depth) {
    if (depth > 0) {
      // solve sum lambda_i p_i = 0, sum lambda_i = 1 in least squares and
      // accept when the residual vanishes and lambda stays nonnegative
      Matrix A(d + 1, static_cast<Index>(depth));
      for (std::size_t c = 0; c < depth; ++c) {
        A.block(0, static_cast<Index>(c), d, 1) = points[idx[c]];
        A(d, static_cast<Index>(c)) = 1.0;
      }
      Vector b = Vector::Zero(d + 1);
      b[d] = 1.0;
      const Vector lambda = A.completeOrthogonalDecomposition().solve(b);
      if ((A * lambda - b).norm() <= tol && lambda.minCoeff() >= -tol) return true;
    }
    if (depth == subset_size) return false;
    for (std::size_t i = start; i < n; ++i) {
      idx[depth] = i;
      if (scan(i + 1, depth + 1)) return true;
    }
    return false;
  };
  return scan(0, 0);
}

// concave piecewise-linear objective (a finite min of affine pieces)
struct ConcavePiecewiseMin {
  std::vector<Vector> slopes;
  std::vector<double> offsets;

  double operator()(const Vector& y) const {
    double v = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < slopes.size(); ++j)
      v = std::min(v, slopes[j].dot(y) + offsets[j]);
    return v;
  }
};

inline ConcavePiecewiseMin random_concave(Index dim, int pieces, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  ConcavePiecewiseMin f;
  for (int j = 0; j < pieces; ++j) {
    Vector s(dim);
    for (Index i = 0; i < dim; ++i) s[i] = gauss(rng);
    f.slopes.push_back(s);
    f.offsets.push_back(1.0 + 0.3 * gauss(rng));
  }
  return f;
}

// random point of the standard simplex with total mass `mass`
inline Vector random_simplex_point(Index dim, double mass, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  Vector g(dim);
  for (Index i = 0; i < dim; ++i) g[i] = expo(rng) + 1e-3;
  return (mass / g.sum()) * g;
}

// Haar-ish random m x r complex isometry via Gram-Schmidt of a Gaussian
inline Eigen::MatrixXcd random_isometry(Index m, Index r, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::MatrixXcd v(m, r);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < r; ++j) v(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  for (Index j = 0; j < r; ++j) {
    for (Index k = 0; k < j; ++k) v.col(j) -= v.col(k).dot(v.col(j)) * v.col(k);
    v.col(j) /= v.col(j).norm();
  }
  return v;
}

}  // namespace mukit::testing
