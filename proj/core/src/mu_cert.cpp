#include "mukit/mu_cert.hpp"

#include <algorithm>
#include <cmath>

#include "mukit/linprog.hpp"

namespace mukit::cert {
namespace {

bool is_tail_basis_vector(const Vector& y, Index prefix, double tol = 1e-12) {
  // matches e_i with i > prefix
  Index hot = -1;
  for (Index i = 0; i < y.size(); ++i) {
    const double v = y[i];
    if (std::abs(v - 1.0) <= tol) {
      if (hot >= 0) return false;
      hot = i;
    } else if (std::abs(v) > tol) {
      return false;
    }
  }
  return hot >= prefix;
}

std::vector<Vector> normalized(const std::vector<Vector>& generators) {
  if (generators.empty()) throw std::invalid_argument("cone: no generators");
  const Index d = generators.front().size();
  if (d < 1) throw std::invalid_argument("cone: dimension must be >= 1");
  std::vector<Vector> out;
  out.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.size() != d) throw std::invalid_argument("cone: generator dimension mismatch");
    const double n = g.norm();
    if (n < 1e-14) throw std::invalid_argument("cone: zero generator");
    out.push_back(g / n);
  }
  return out;
}

// feasibility of  sum_j y_j ghat_j = 0, sum y = 1, y >= 0
lp::Solution lineality_lp(const std::vector<Vector>& ghat) {
  const Index m = static_cast<Index>(ghat.size());
  const Index d = ghat.front().size();
  lp::Problem prob;
  prob.c = Vector::Zero(m);
  prob.eq_lhs.resize(d + 1, m);
  prob.eq_rhs = Vector::Zero(d + 1);
  for (Index j = 0; j < m; ++j) prob.eq_lhs.block(0, j, d, 1) = ghat[static_cast<std::size_t>(j)];
  prob.eq_lhs.row(d).setOnes();
  prob.eq_rhs[d] = 1.0;
  return lp::solve(prob);
}

// feasibility of  sum_j mu_j ghat_j = target, mu >= 0
lp::Solution conic_membership_lp(const std::vector<Vector>& ghat, const Vector& target) {
  const Index m = static_cast<Index>(ghat.size());
  const Index d = target.size();
  lp::Problem prob;
  prob.c = Vector::Zero(m);
  prob.eq_lhs.resize(d, m);
  for (Index j = 0; j < m; ++j) prob.eq_lhs.block(0, j, d, 1) = ghat[static_cast<std::size_t>(j)];
  prob.eq_rhs = target;
  return lp::solve(prob);
}

}  // namespace

void CertificateFamily::validate_nonnegative(const spaces::SetDescriptor& desc, int samples,
                                             std::uint64_t seed, double tol) const {
  if (members.empty()) throw std::invalid_argument("CertificateFamily: empty family");
  auto rng = make_rng(seed, 0xCE27);
  std::vector<Vector> probes = spaces::anchor_extreme_points(desc, desc.dim + 1);
  for (int i = 0; i < samples; ++i) probes.push_back(spaces::sample_point(desc, rng));
  for (const auto& fm : members) {
    if (fm.h.size() != desc.dim)
      throw std::invalid_argument("CertificateFamily: member dimension mismatch");
    for (const auto& y : probes) {
      if (fm(y) < -tol)
        throw CertificateViolation("certificate family member '" + fm.label +
                                   "' is negative on a sampled point");
    }
  }
}

TailCheckResult tail_certificate_check(const AffineCertificate& fam_member, const Vector& x,
                                       const FiniteMeasure& mu, double eps, double tol) {
  if (!(eps > 0.0)) throw std::invalid_argument("tail_certificate_check: eps must be positive");
  if (fam_member.h.size() != x.size())
    throw std::invalid_argument("tail_certificate_check: dimension mismatch");
  if ((measures::barycenter(mu) - x).norm() > 1e-8 * (1.0 + x.norm()))
    throw std::invalid_argument("tail_certificate_check: barycenter(mu) != x");

  const double cx = fam_member(x);
  if (cx < -tol)
    throw CertificateViolation("certificate value negative at the barycenter");
  for (const auto& atom : mu.atoms) {
    if (fam_member(atom) < -tol)
      throw CertificateViolation("certificate value negative on an atom");
  }

  TailCheckResult out;
  out.threshold = std::max(cx, 0.0) / eps;
  out.outside_mass = measures::mass_outside(
      mu, [&](const Vector& y) { return fam_member(y) <= out.threshold + tol; });
  out.passed = out.outside_mass <= eps + tol;
  if (!out.passed) {
    out.witness = Witness{x, mu, 0, out.outside_mass};
  }
  return out;
}

DeltaPRefutation delta_p_refute(double p, int r, double eps, Index prefix_N, Index dim) {
  if (!(p > 1.0)) throw std::invalid_argument("delta_p_refute: requires p > 1");
  if (r < 1) throw std::invalid_argument("delta_p_refute: block index must be >= 1");
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("delta_p_refute: eps must lie in (0, 1)");
  if (prefix_N < 0) throw std::invalid_argument("delta_p_refute: negative prefix");

  const auto block_length = [p](int rho) {
    return static_cast<Index>(std::ceil(std::pow(static_cast<double>(rho), 1.0 / (p - 1.0)) -
                                        1e-12));
  };

  // consecutive layout n_1 = 1, n_{rho+1} = n_rho + L_rho, shifted as a whole
  // so block r starts past the prefix
  std::vector<Index> starts(static_cast<std::size_t>(r) + 1);
  starts[0] = 1;
  for (int rho = 1; rho <= r; ++rho)
    starts[static_cast<std::size_t>(rho)] = starts[static_cast<std::size_t>(rho - 1)] + block_length(rho);
  const Index shift = std::max<Index>(0, prefix_N + 1 - starts[static_cast<std::size_t>(r - 1)]);
  for (auto& s : starts) s += shift;

  const Index L = block_length(r);
  const Index start = starts[static_cast<std::size_t>(r - 1)];
  const Index needed = start + L - 1;
  if (dim < needed)
    throw ResizeRequired("delta_p_refute: truncation dimension too small for the block", needed);

  const double z = 1.0 / static_cast<double>(L);
  Vector x = Vector::Zero(dim);
  std::vector<Vector> atoms;
  std::vector<double> w;
  double power_sum = 0.0;
  for (Index i = start; i < start + L; ++i) {
    x[i - 1] = z;
    atoms.push_back(spaces::canonical_basis(i, dim));
    w.push_back(z);
    power_sum += std::pow(z, p);
  }
  if (power_sum > 1.0 / static_cast<double>(r) + 1e-12)
    throw std::logic_error("delta_p_refute: in-block power sum exceeds 1/r");

  // x must lie inside the compact K = {y : sum_{i >= n_rho} y_i^p <= 1/rho};
  // x vanishes off the block, so each tail sum runs over the block only
  for (int rho = 1; rho <= r; ++rho) {
    const Index from = std::max(starts[static_cast<std::size_t>(rho - 1)], start);
    double tail = 0.0;
    for (Index i = from; i < start + L; ++i) tail += std::pow(x[i - 1], p);
    if (tail > 1.0 / static_cast<double>(rho) + 1e-12)
      throw std::logic_error("delta_p_refute: witness escapes the compact K");
  }

  FiniteMeasure mu(atoms, Eigen::Map<Vector>(w.data(), static_cast<Index>(w.size())));
  const double outside = measures::mass_outside(
      mu, [&](const Vector& y) { return !is_tail_basis_vector(y, prefix_N); });

  DeltaPRefutation out;
  out.witness = Witness{x, std::move(mu), prefix_N, outside};
  out.block_index = r;
  out.block_start = start;
  out.block_length = L;
  out.in_block_power_sum = power_sum;
  out.layout_starts = std::move(starts);
  return out;
}

ApRefutation ap_refute(double p, Index prefix_N, Index dim, double c) {
  if (!(p > 1.0)) throw std::invalid_argument("ap_refute: requires p > 1");
  if (prefix_N < 0 || dim < prefix_N + 2)
    throw std::invalid_argument("ap_refute: dimension must exceed the prefix");

  Vector harmonic(dim);
  for (Index i = 0; i < dim; ++i) harmonic[i] = 1.0 / static_cast<double>(i + 1);
  if (std::isnan(c)) c = 0.99 / (3.0 * spaces::lp_norm(harmonic, p));

  Vector x = c * harmonic;
  const double norm_p = spaces::lp_norm(x, p);
  if (!(norm_p < 1.0 / 3.0))
    throw std::invalid_argument("ap_refute: scaling too large, ||x||_p must stay below 1/3");

  // first partial sum past the prefix that crosses 1/3; increments are below
  // 1/3 so the crossing lands inside (1/3, 2/3)
  double s = 0.0;
  Index r = 0;
  for (Index i = prefix_N; i < dim; ++i) {
    s += x[i];
    ++r;
    if (s > 1.0 / 3.0) break;
  }
  if (!(s > 1.0 / 3.0)) {
    const double needed_log =
        1.0 / (3.0 * c) + std::log(static_cast<double>(std::max<Index>(prefix_N, 1)));
    throw ResizeRequired("ap_refute: divergent-sum budget does not reach 1/3 at this dimension",
                         static_cast<Index>(std::ceil(std::exp(needed_log))) + 1);
  }
  if (!(s < 2.0 / 3.0)) throw std::logic_error("ap_refute: partial sum overshot 2/3");

  Vector x_bar = x;
  std::vector<Vector> atoms;
  std::vector<double> w;
  for (Index i = prefix_N; i < prefix_N + r; ++i) {
    x_bar[i] = 0.0;
    atoms.push_back(spaces::canonical_basis(i + 1, dim));
    w.push_back(x[i]);
  }
  const Vector head_atom = x_bar / (1.0 - s);
  const double rescaled = spaces::lp_norm(head_atom, p);
  if (rescaled > 1.0 + 1e-12)
    throw std::logic_error("ap_refute: rescaled remainder left the cone");

  atoms.push_back(head_atom);
  w.push_back(1.0 - s);
  FiniteMeasure mu(atoms, Eigen::Map<Vector>(w.data(), static_cast<Index>(w.size())));

  const double outside = measures::mass_outside(
      mu, [&](const Vector& y) { return !is_tail_basis_vector(y, prefix_N); });

  ApRefutation out;
  out.witness = Witness{std::move(x), std::move(mu), prefix_N, outside};
  out.r = r;
  out.s = s;
  out.point_norm_p = norm_p;
  out.rescaled_norm_p = rescaled;
  return out;
}

Vector cube_block_vector(const Vector& a, const CubeBlock& block) {
  Vector b = Vector::Zero(a.size());
  for (Index i = block.first; i <= block.last; ++i) b[i - 1] = a[i - 1];
  return b;
}

CubeClassification hilbert_cube_classify(const Vector& a, double tol) {
  if (a.size() == 0 || (a.array() <= 0.0).any())
    throw std::invalid_argument("hilbert_cube_classify: sides must be strictly positive");
  const Index dim = a.size();

  CubeClassification out;

  // suffix l2 norms; compactness is a property of the tail alone
  out.tail_norms.resize(static_cast<std::size_t>(dim));
  double suffix = 0.0;
  for (Index i = dim - 1; i >= 0; --i) {
    suffix += a[i] * a[i];
    out.tail_norms[static_cast<std::size_t>(i)] = std::sqrt(suffix);
  }
  const Index half = dim / 2;
  out.suffix_energy = half < dim ? out.tail_norms[static_cast<std::size_t>(half)] *
                                       out.tail_norms[static_cast<std::size_t>(half)]
                                 : 0.0;
  if (out.suffix_energy < tol) {
    out.verdict = CubeVerdict::CompactCertificate;
    return out;
  }

  // greedy unit-energy blocks: close each block at the first index where the
  // running square sum reaches 1
  double acc = 0.0;
  Index first = 1;
  for (Index i = 1; i <= dim; ++i) {
    acc += a[i - 1] * a[i - 1];
    if (acc >= 1.0) {
      out.blocks.push_back(CubeBlock{first, i, acc});
      acc = 0.0;
      first = i + 1;
    }
  }
  if (!out.blocks.empty()) {
    out.verdict = CubeVerdict::RefutationBlocks;
    out.tail_norms.clear();
  } else {
    out.verdict = CubeVerdict::Inconclusive;
  }
  return out;
}

ConeClassification pointed_cone_classify(const std::vector<Vector>& generators, double tol) {
  const auto ghat = normalized(generators);
  const Index m = static_cast<Index>(ghat.size());
  const Index d = ghat.front().size();

  // axis LP: a = u - v, minimize ||a||_1 subject to <ghat_j, a> >= 1
  lp::Problem axis;
  axis.c = Vector::Ones(2 * d);
  axis.ub_lhs.resize(m, 2 * d);
  axis.ub_rhs = Vector::Constant(m, -1.0);
  for (Index j = 0; j < m; ++j) {
    axis.ub_lhs.block(j, 0, 1, d) = -ghat[static_cast<std::size_t>(j)].transpose();
    axis.ub_lhs.block(j, d, 1, d) = ghat[static_cast<std::size_t>(j)].transpose();
  }
  const auto axis_sol = lp::solve(axis);

  ConeClassification out;
  if (axis_sol.status == lp::Status::Optimal) {
    out.kind = ConeKind::Pointed;
    out.axis = axis_sol.x.head(d) - axis_sol.x.tail(d);
    // sanity: strict positivity on every normalized generator
    for (const auto& g : ghat) {
      if (g.dot(out.axis) < 1.0 - 1e-6) {
        out.kind = ConeKind::Inconclusive;
        return out;
      }
    }
    return out;
  }
  if (axis_sol.status != lp::Status::Infeasible) {
    out.kind = ConeKind::Inconclusive;
    return out;
  }

  // infeasible axis: 0 is a nontrivial conic combination; the heaviest
  // generator direction then lies on a line inside the cone
  const auto line_sol = lineality_lp(ghat);
  if (line_sol.status != lp::Status::Optimal) {
    out.kind = ConeKind::Inconclusive;
    return out;
  }
  Index j0;
  line_sol.x.maxCoeff(&j0);
  if (line_sol.x[j0] <= tol) {
    out.kind = ConeKind::Inconclusive;
    return out;
  }
  out.kind = ConeKind::ContainsLine;
  out.line_generator = j0;
  out.line_direction = ghat[static_cast<std::size_t>(j0)];
  out.neg_reconstruction = line_sol.x / line_sol.x[j0];
  out.neg_reconstruction[j0] = 0.0;
  return out;
}

EquivalenceReport polyhedral_equivalence_check(const std::vector<Vector>& generators,
                                               const Vector& offset, double tol) {
  const auto ghat = normalized(generators);
  const Index d = offset.size();
  if (ghat.front().size() != d)
    throw std::invalid_argument("polyhedral_equivalence_check: offset dimension mismatch");
  if (d > 10)
    throw std::invalid_argument("polyhedral_equivalence_check: supported up to dimension 10");

  EquivalenceReport rep;

  // (i) containment in a (translate of a) pointed cone: axis route
  rep.contained_in_pointed_cone =
      pointed_cone_classify(generators).kind == ConeKind::Pointed;

  // (ii) the offset is a vertex iff no generator direction reverses in the cone
  rep.has_extreme_point = true;
  for (const auto& g : ghat) {
    const auto sol = conic_membership_lp(ghat, -g);
    if (sol.status == lp::Status::Optimal) {
      rep.has_extreme_point = false;
      break;
    }
  }

  // (iii) line-freeness: no vanishing nontrivial conic combination
  rep.line_free = lineality_lp(ghat).status != lp::Status::Optimal;

  // (iv) Chebyshev ball in the polar {y : <offset,y> <= 1, <g,y> <= 0}
  {
    const double box = 1e4;
    const Index m = static_cast<Index>(ghat.size());
    lp::Problem cheb;
    cheb.c = Vector::Zero(d + 1);
    cheb.c[d] = -1.0;  // maximize r
    const Index rows = 1 + m + 1 + 2 * d;
    cheb.ub_lhs = Matrix::Zero(rows, d + 1);
    cheb.ub_rhs.resize(rows);
    cheb.ub_lhs.block(0, 0, 1, d) = offset.transpose();
    cheb.ub_lhs(0, d) = offset.norm();
    cheb.ub_rhs[0] = 1.0;
    for (Index j = 0; j < m; ++j) {
      cheb.ub_lhs.block(1 + j, 0, 1, d) = ghat[static_cast<std::size_t>(j)].transpose();
      cheb.ub_lhs(1 + j, d) = 1.0;
      cheb.ub_rhs[1 + j] = 0.0;
    }
    cheb.ub_lhs(1 + m, d) = 1.0;  // r <= 1
    cheb.ub_rhs[1 + m] = 1.0;
    for (Index i = 0; i < d; ++i) {
      cheb.ub_lhs(2 + m + 2 * i, i) = 1.0;
      cheb.ub_rhs[2 + m + 2 * i] = box;
      cheb.ub_lhs(2 + m + 2 * i + 1, i) = -1.0;
      cheb.ub_rhs[2 + m + 2 * i + 1] = box;
    }
    cheb.free_vars.assign(static_cast<std::size_t>(d + 1), true);
    cheb.free_vars[static_cast<std::size_t>(d)] = false;  // r >= 0
    const auto sol = lp::solve(cheb);
    rep.polar_ball_radius = sol.optimal() ? sol.x[d] : 0.0;
    rep.polar_has_interior = rep.polar_ball_radius > tol;
  }

  rep.consistent = (rep.contained_in_pointed_cone == rep.has_extreme_point) &&
                   (rep.has_extreme_point == rep.line_free) &&
                   (rep.line_free == rep.polar_has_interior);
  return rep;
}

}  // namespace mukit::cert
