#include "mukit/quantum.hpp"

#include <algorithm>
#include <cmath>

namespace mukit::quantum {
namespace {

using Complex = std::complex<double>;

Vector hermitian_eigenvalues(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

// Theta(phi phi*) for an unnormalized bipartite vector: reshape phi into the
// dH x dK coefficient matrix M, then the reduced operator is M M*.
CMatrix reduced_from_vector(const CVector& phi, Index dh, Index dk) {
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> M(
      phi.data(), dh, dk);
  return M * M.adjoint();
}

}  // namespace

DensityMatrix::DensityMatrix(CMatrix m, Index dh, Index dk)
    : entries(std::move(m)), dim_h(dh), dim_k(dk) {
  validate();
}

DensityMatrix DensityMatrix::from_pure(const CVector& psi, Index dh, Index dk) {
  if (psi.size() != dh * dk)
    throw std::invalid_argument("DensityMatrix::from_pure: dimension mismatch");
  const double n2 = psi.squaredNorm();
  if (n2 < 1e-14) throw std::invalid_argument("DensityMatrix::from_pure: zero vector");
  DensityMatrix rho;
  rho.entries = (psi * psi.adjoint()) / n2;
  rho.dim_h = dh;
  rho.dim_k = dk;
  return rho;
}

void DensityMatrix::validate(double tol) const {
  if (dim_h < 1 || dim_k < 1 || entries.rows() != dim_h * dim_k ||
      entries.rows() != entries.cols())
    throw std::invalid_argument("DensityMatrix: factor dimensions do not match the matrix");
  if ((entries - entries.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(entries.trace().real() - 1.0) > tol || std::abs(entries.trace().imag()) > tol)
    throw std::invalid_argument("DensityMatrix: trace must equal 1");
  if (hermitian_eigenvalues(entries).minCoeff() < -tol)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue");
}

Vector DensityMatrix::spectrum() const {
  Vector ev = hermitian_eigenvalues(entries);
  std::sort(ev.data(), ev.data() + ev.size(), std::greater<double>());
  return ev.cwiseMax(0.0).cwiseMin(1.0);
}

double DensityMatrix::largest_eigenvalue() const { return spectrum()[0]; }

bool DensityMatrix::is_pure(double tol) const { return largest_eigenvalue() > 1.0 - tol; }

DensityMatrix partial_trace(const DensityMatrix& omega) {
  if (!omega.bipartite())
    throw std::invalid_argument("partial_trace: input is not bipartite");
  const Index dh = omega.dim_h, dk = omega.dim_k;
  CMatrix out = CMatrix::Zero(dh, dh);
  for (Index h = 0; h < dh; ++h)
    for (Index hp = 0; hp < dh; ++hp)
      for (Index k = 0; k < dk; ++k) out(h, hp) += omega.entries(h * dk + k, hp * dk + k);
  DensityMatrix rho;
  rho.entries = std::move(out);
  rho.dim_h = dh;
  rho.dim_k = 1;
  return rho;
}

double f_alpha(const DensityMatrix& rho, double alpha) {
  if (!(alpha > 1.0)) throw std::domain_error("f_alpha: requires alpha > 1");
  const Vector ev = rho.spectrum();
  double acc = 0.0;
  for (Index i = 0; i < ev.size(); ++i)
    if (ev[i] > 0.0) acc += std::pow(ev[i], alpha);
  return 2.0 * (1.0 - acc);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const Vector ev = rho.spectrum();
  double acc = 0.0;
  for (Index i = 0; i < ev.size(); ++i)
    if (ev[i] > 0.0) acc -= ev[i] * std::log2(ev[i]);
  return acc;
}

double trace_norm(const CMatrix& a) {
  return hermitian_eigenvalues(a).cwiseAbs().sum();
}

DensityMatrix component_matrix(const RoofComponent& c, Index dh, Index dk) {
  return DensityMatrix::from_pure(c.state, dh, dk);
}

namespace {

// Ensemble state: columns of S are the unnormalized phi_i = sum_j V_ij b_j,
// where b_j are the scaled eigenvectors of omega. Givens rotations on rows
// of V act as plane rotations on the columns of S.
struct Ensemble {
  CMatrix S;  // d x m
  Index dh, dk;
  const StateFunction* f;
  Vector terms;  // cached per-component contributions

  double component_value(Index i) const {
    const CVector phi = S.col(i);
    const double pi = phi.squaredNorm();
    if (pi < 1e-12) return 0.0;
    DensityMatrix rho;
    rho.entries = reduced_from_vector(phi, dh, dk) / pi;
    rho.dim_h = dh;
    rho.dim_k = 1;
    return pi * (*f)(rho);
  }

  double total() const { return terms.sum(); }

  void refresh_all() {
    terms.resize(S.cols());
    for (Index i = 0; i < S.cols(); ++i) terms[i] = component_value(i);
  }
};

}  // namespace

RoofResult roof_optimize(const DensityMatrix& omega, const StateFunction& f,
                         const RoofConfig& cfg) {
  omega.validate();
  if (!omega.bipartite())
    throw std::invalid_argument("roof_optimize: state is not bipartite");

  Eigen::SelfAdjointEigenSolver<CMatrix> es(omega.entries);
  const Vector ev = es.eigenvalues();
  const Index d = omega.dim();

  std::vector<Index> keep;
  for (Index j = d - 1; j >= 0; --j)
    if (ev[j] > 1e-12) keep.push_back(j);
  const Index rank = static_cast<Index>(keep.size());

  RoofResult out;
  if (rank == 1 || omega.largest_eigenvalue() > 1.0 - 1e-12) {
    // a pure state has a unique decomposition
    const CVector psi = es.eigenvectors().col(keep.front());
    const DensityMatrix theta = partial_trace(DensityMatrix::from_pure(psi, omega.dim_h, omega.dim_k));
    out.upper_bound = f(theta);
    out.decomposition.push_back({1.0, psi});
    out.pure_shortcut = true;
    out.ensemble_size = 1;
    return out;
  }

  Index m = cfg.m;
  if (m == 0) m = std::max<Index>(rank, std::min<Index>(rank * rank, 16));
  if (m < rank)
    throw std::invalid_argument("roof_optimize: ensemble size below rank cannot reconstruct the state");

  CMatrix B(d, rank);  // scaled eigenvectors sqrt(lambda_j) |e_j>
  for (Index c = 0; c < rank; ++c)
    B.col(c) = std::sqrt(ev[keep[static_cast<std::size_t>(c)]]) *
               es.eigenvectors().col(keep[static_cast<std::size_t>(c)]);

  double best_value = 0.0;
  CMatrix best_S;
  int best_restart = -1;

  out.restarts_used = cfg.restarts;
  for (int restart = 0; restart < cfg.restarts; ++restart) {
    // restart 0 embeds the eigen-ensemble itself; the rest start from random
    // isometries
    CMatrix V;
    if (restart == 0) {
      V = CMatrix::Zero(m, rank);
      V.topLeftCorner(rank, rank).setIdentity();
    } else {
      auto rng = make_rng(cfg.seed, static_cast<std::uint64_t>(restart));
      std::normal_distribution<double> gauss(0.0, 1.0);
      CMatrix G(m, rank);
      for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < rank; ++j) G(i, j) = Complex(gauss(rng), gauss(rng));
      Eigen::HouseholderQR<CMatrix> qr(G);
      V = qr.householderQ() * CMatrix::Identity(m, rank);
    }

    Ensemble ens{B * V.transpose(), omega.dim_h, omega.dim_k, &f, {}};
    ens.refresh_all();
    double value = ens.total();
    std::vector<double> trajectory{value};

    double step = cfg.init_step;
    for (int sweep = 0; sweep < cfg.max_sweeps && step > cfg.min_step; ++sweep) {
      bool accepted_any = false;
      for (Index pidx = 0; pidx < m; ++pidx) {
        for (Index q = pidx + 1; q < m; ++q) {
          // four trial plane rotations on the (p, q) component pair
          for (int mode = 0; mode < 4; ++mode) {
            const double theta = (mode % 2 == 0) ? step : -step;
            const Complex phase = (mode < 2) ? Complex(1, 0) : Complex(0, 1);
            const double ct = std::cos(theta), st = std::sin(theta);
            const CVector cp = ens.S.col(pidx), cq = ens.S.col(q);
            const CVector np = ct * cp - std::conj(phase) * st * cq;
            const CVector nq = phase * st * cp + ct * cq;
            const double before = ens.terms[pidx] + ens.terms[q];
            ens.S.col(pidx) = np;
            ens.S.col(q) = nq;
            const double tp = ens.component_value(pidx);
            const double tq = ens.component_value(q);
            if (tp + tq < before - 1e-15) {
              ens.terms[pidx] = tp;
              ens.terms[q] = tq;
              value += tp + tq - before;
              trajectory.push_back(value);
              accepted_any = true;
            } else {
              ens.S.col(pidx) = cp;
              ens.S.col(q) = cq;
            }
          }
        }
      }
      if (!accepted_any) step *= 0.5;
    }

    // exact value at the final iterate
    ens.refresh_all();
    value = ens.total();
    trajectory.push_back(value);
    out.trajectories.push_back(std::move(trajectory));

    // ties resolve to the earliest restart
    if (best_restart < 0 || value < best_value) {
      best_value = value;
      best_S = ens.S;
      best_restart = restart;
    }
  }

  out.upper_bound = best_value;
  out.ensemble_size = m;
  for (Index i = 0; i < best_S.cols(); ++i) {
    const CVector phi = best_S.col(i);
    const double pi = phi.squaredNorm();
    if (pi < 1e-12) continue;  // f(Theta(.)) is undefined on zero vectors
    out.decomposition.push_back({pi, phi / std::sqrt(pi)});
  }
  // renormalize the surviving weights
  double wsum = 0.0;
  for (const auto& c : out.decomposition) wsum += c.weight;
  for (auto& c : out.decomposition) c.weight /= wsum;
  // recompute the certified value from the reported decomposition
  double recompute = 0.0;
  for (const auto& c : out.decomposition) {
    DensityMatrix rho;
    rho.entries = reduced_from_vector(c.state, omega.dim_h, omega.dim_k);
    rho.entries /= rho.entries.trace().real();
    rho.dim_h = omega.dim_h;
    rho.dim_k = 1;
    recompute += c.weight * f(rho);
  }
  out.upper_bound = recompute;
  return out;
}

RoofResult roof_convexity_certificate(const std::vector<std::pair<double, RoofResult>>& parts) {
  if (parts.empty())
    throw std::invalid_argument("roof_convexity_certificate: no parts");
  double wsum = 0.0;
  Index dim = -1;
  for (const auto& [w, res] : parts) {
    if (w < -1e-12) throw std::invalid_argument("roof_convexity_certificate: negative weight");
    wsum += w;
    for (const auto& c : res.decomposition) {
      if (dim < 0) dim = c.state.size();
      if (c.state.size() != dim)
        throw std::invalid_argument("roof_convexity_certificate: dimension mismatch");
    }
  }
  if (std::abs(wsum - 1.0) > 1e-9)
    throw std::invalid_argument("roof_convexity_certificate: weights must sum to 1");

  RoofResult out;
  out.upper_bound = 0.0;
  for (const auto& [w, res] : parts) {
    out.upper_bound += w * res.upper_bound;
    for (const auto& c : res.decomposition) {
      if (w * c.weight > 0.0) out.decomposition.push_back({w * c.weight, c.state});
    }
    out.ensemble_size += res.ensemble_size;
  }
  return out;
}

CVector ket_00() {
  CVector v = CVector::Zero(4);
  v[0] = 1.0;
  return v;
}

CVector bell_phi_plus() {
  CVector v = CVector::Zero(4);
  v[0] = v[3] = 1.0 / std::sqrt(2.0);
  return v;
}

CVector bell_phi_minus() {
  CVector v = CVector::Zero(4);
  v[0] = 1.0 / std::sqrt(2.0);
  v[3] = -1.0 / std::sqrt(2.0);
  return v;
}

}  // namespace mukit::quantum
