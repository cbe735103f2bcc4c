#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

#include "mukit/common.hpp"

namespace mukit::quantum {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Hermitian PSD unit-trace matrix on H (x) K; dim_k = 1 for single systems.
struct DensityMatrix {
  CMatrix entries;
  Index dim_h = 1;
  Index dim_k = 1;

  DensityMatrix() = default;
  DensityMatrix(CMatrix m, Index dh, Index dk);

  static DensityMatrix from_pure(const CVector& psi, Index dh, Index dk);

  Index dim() const { return entries.rows(); }
  bool bipartite() const { return dim_k > 1; }
  void validate(double tol = 1e-10) const;

  /// Descending eigenvalues, clamped into [0, 1].
  Vector spectrum() const;
  double largest_eigenvalue() const;
  bool is_pure(double tol = 1e-8) const;
};

/// Theta: Tr_K. Trace- and positivity-preserving; errors on dim_k == 1.
DensityMatrix partial_trace(const DensityMatrix& omega);

/// f_alpha(rho) = 2 (1 - Tr rho^alpha), alpha > 1. Unitarily invariant,
/// nonnegative, zero exactly on pure states.
double f_alpha(const DensityMatrix& rho, double alpha);

/// -Tr rho log2 rho with 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// Sum of absolute eigenvalues of a Hermitian difference (trace norm).
double trace_norm(const CMatrix& a);

struct RoofComponent {
  double weight = 0.0;
  CVector state;  // normalized pure component on H (x) K
};

DensityMatrix component_matrix(const RoofComponent& c, Index dh, Index dk);

struct RoofResult {
  double upper_bound = 0.0;
  std::vector<RoofComponent> decomposition;
  int restarts_used = 0;
  std::vector<std::vector<double>> trajectories;  // accepted objective values per restart
  bool pure_shortcut = false;
  Index ensemble_size = 0;
};

struct RoofConfig {
  Index m = 0;  // ensemble size; 0 picks min(rank^2, 16) clamped to >= rank
  int restarts = 64;
  std::uint64_t seed = kDefaultSeed;
  double tol = 1e-9;
  int max_sweeps = 80;
  double init_step = 0.6;
  double min_step = 1e-5;
};

using StateFunction = std::function<double(const DensityMatrix&)>;

/// Convex-roof upper bound: parameterizes size-m pure decompositions of
/// omega as isometries applied to the eigen-ensemble and minimizes
/// sum_i pi_i f(Theta(phi_i phi_i* / pi_i)) by seeded coordinate rotations
/// (Givens angles with geometric step decay). Pure inputs shortcut to
/// f(Theta(omega)) without search. Deterministic given cfg.seed.
RoofResult roof_optimize(const DensityMatrix& omega, const StateFunction& f,
                         const RoofConfig& cfg = {});

/// Convexity certificate: concatenating the decompositions of the parts with
/// scaled weights decomposes the mixture, so sum w_i upper_i bounds the roof
/// of the mixture from above.
RoofResult roof_convexity_certificate(const std::vector<std::pair<double, RoofResult>>& parts);

// Reference states used across tests and the scenario registry.
CVector ket_00();
CVector bell_phi_plus();
CVector bell_phi_minus();

}  // namespace mukit::quantum
