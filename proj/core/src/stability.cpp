#include "mukit/stability.hpp"

#include <algorithm>
#include <cmath>

#include "mukit/linprog.hpp"

namespace mukit::stability {
namespace {

using spaces::SetFamily;

// Returns (x, y) with x + y == 2z exact in doubles, x = z + h up to one
// rounding, both nonnegative. Requires z >= 0 and |h| <= z. The larger
// element is rounded once; the smaller is then exact by Sterbenz.
std::pair<double, double> symmetric_pair(double z, double h) {
  if (z == 0.0) return {0.0, 0.0};
  h = std::clamp(h, -z, z);
  if (h >= 0.0) {
    const double x = z + h;       // in [z, 2z]
    const double y = 2.0 * z - x; // exact
    return {x, y};
  }
  const double y = z - h;         // in [z, 2z]
  const double x = 2.0 * z - y;   // exact
  return {x, y};
}

double tail_lp_norm(const Vector& v, Index head, double p) {
  const Index n = v.size();
  if (head >= n) return 0.0;
  return spaces::lp_norm(v.tail(n - head).eval(), p);
}

bool is_simplex_shaped(SetFamily f) {
  return f == SetFamily::SimplexDeltaP || f == SetFamily::StandardTruncatedSimplex ||
         f == SetFamily::L1ConeBounded;
}

}  // namespace

SplitResult delta_p_split(double p, const Vector& a_in, const Vector& b_in, const Vector& z,
                          double eps) {
  if (!(p >= 1.0)) throw std::domain_error("delta_p_split: p must satisfy p >= 1");
  if (!(eps > 0.0)) throw std::invalid_argument("delta_p_split: eps must be positive");
  const Index n = z.size();
  if (a_in.size() != n || b_in.size() != n)
    throw std::invalid_argument("delta_p_split: dimension mismatch");

  const auto simplex = spaces::SetDescriptor::standard_simplex(n);
  for (const auto* v : {&a_in, &b_in, &z}) {
    if (!spaces::contains(simplex, *v))
      throw std::invalid_argument("delta_p_split: input point is outside the simplex");
  }

  SplitResult out;

  // exact-midpoint fast path: z is the floating-point midpoint of [a, b]
  bool exact_mid = true;
  for (Index k = 0; k < n && exact_mid; ++k)
    exact_mid = ((a_in[k] + b_in[k]) / 2.0 == z[k]);
  if (exact_mid) {
    out.x = a_in;
    out.y = b_in;
    out.tau = 0.0;
    out.head_dim = n;
    out.achieved_eps = 0.0;
    return out;
  }

  const double delta = eps / 6.0;
  const double mid_err = spaces::lp_norm((z - (a_in + b_in) / 2.0).eval(), p);
  if (!(mid_err < delta))
    throw std::invalid_argument(
        "delta_p_split: ||z - (a+b)/2||_p = " + std::to_string(mid_err) +
        " violates the bound eps/6 = " + std::to_string(delta));

  // points too close to the simplex boundary sphere move toward the midpoint
  Vector a = a_in, b = b_in;
  const double seg = spaces::lp_norm((a - b).eval(), p);
  if (seg > 0 &&
      (spaces::lp_norm(a, p) >= 1.0 - eps || spaces::lp_norm(b, p) >= 1.0 - eps)) {
    const double t = std::min(0.5, 2.0 * eps / seg);
    const Vector a2 = a + t * (b - a);
    const Vector b2 = b + t * (a - b);
    a = a2;
    b = b2;
  }

  // head dimension: both tails below eps/6 in p-norm
  Index head = n;
  for (Index m = 1; m <= n; ++m) {
    if (tail_lp_norm(a, m, p) < delta && tail_lp_norm(b, m, p) < delta) {
      head = m;
      break;
    }
  }
  out.head_dim = head;

  const Vector ah = a.head(head), bh = b.head(head), zh = z.head(head);
  const Vector d = 2.0 * zh - ah - bh;
  const Vector base_x = ah + 0.5 * d;
  const Vector base_y = bh + 0.5 * d;

  // correction LP around the symmetric split: minimize ||w||_1 subject to
  // nonnegativity and the two head-sum caps; w = w+ - w-
  lp::Problem prob;
  prob.c = Vector::Ones(2 * head);
  const Index rows = 2 * head + 2;
  prob.ub_lhs = Matrix::Zero(rows, 2 * head);
  prob.ub_rhs.resize(rows);
  for (Index i = 0; i < head; ++i) {
    prob.ub_lhs(i, i) = -1.0;  // -w_i <= base_x_i
    prob.ub_lhs(i, head + i) = 1.0;
    prob.ub_rhs[i] = base_x[i];
    prob.ub_lhs(head + i, i) = 1.0;  // w_i <= base_y_i
    prob.ub_lhs(head + i, head + i) = -1.0;
    prob.ub_rhs[head + i] = base_y[i];
  }
  for (Index i = 0; i < head; ++i) {
    prob.ub_lhs(2 * head, i) = 1.0;  // sum w <= 1 - sum base_x
    prob.ub_lhs(2 * head, head + i) = -1.0;
    prob.ub_lhs(2 * head + 1, i) = -1.0;  // -sum w <= 1 - sum base_y
    prob.ub_lhs(2 * head + 1, head + i) = 1.0;
  }
  prob.ub_rhs[2 * head] = 1.0 - base_x.sum();
  prob.ub_rhs[2 * head + 1] = 1.0 - base_y.sum();

  const auto sol = lp::solve(prob);
  if (!sol.optimal())
    throw SolverFailure("delta_p_split: head correction LP failed unexpectedly");
  const Vector w = sol.x.head(head) - sol.x.tail(head);
  Vector xh = base_x + w;
  Vector yh = base_y - w;

  // tau: both l1 norms must not exceed 1; endpoints first, then bisection
  const double Sx = xh.cwiseMax(0.0).sum();
  const double Sy = yh.cwiseMax(0.0).sum();
  const double T = z.size() > head ? z.tail(n - head).sum() : 0.0;
  double tau;
  if (Sy + 2.0 * T <= 1.0 + 1e-12) {
    tau = -1.0;
  } else if (Sx + 2.0 * T <= 1.0 + 1e-12) {
    tau = 1.0;
  } else {
    // balance g(t) = (Sx - Sy) + 2 t T; both norms equal ||z||_1 <= 1 there
    double lo = -1.0, hi = 1.0;
    const auto g = [&](double t) { return (Sx - Sy) + 2.0 * t * T; };
    if (g(lo) > 0.0) std::swap(lo, hi);  // keep g(lo) <= 0 <= g(hi)
    for (int it = 0; it < 200 && std::abs(hi - lo) > 1e-12; ++it) {
      const double mid = 0.5 * (lo + hi);
      (g(mid) <= 0.0 ? lo : hi) = mid;
    }
    tau = 0.5 * (lo + hi);
  }
  out.tau = tau;

  // assemble with exact midpoint per coordinate
  out.x.resize(n);
  out.y.resize(n);
  for (Index k = 0; k < head; ++k) {
    const auto [xk, yk] = symmetric_pair(z[k], xh[k] - z[k]);
    out.x[k] = xk;
    out.y[k] = yk;
  }
  for (Index k = head; k < n; ++k) {
    const auto [xk, yk] = symmetric_pair(z[k], tau * z[k]);
    out.x[k] = xk;
    out.y[k] = yk;
  }

  if (!spaces::contains(simplex, out.x) || !spaces::contains(simplex, out.y))
    throw SolverFailure("delta_p_split: produced endpoints left the simplex");

  out.achieved_eps = std::max(spaces::lp_norm((out.x - a_in).eval(), p),
                              spaces::lp_norm((out.y - b_in).eval(), p));
  if (!(out.achieved_eps < eps))
    throw SolverFailure("delta_p_split: achieved eps " + std::to_string(out.achieved_eps) +
                        " did not meet the budget " + std::to_string(eps));
  return out;
}

ProbeReport midpoint_openness_probe(const SetDescriptor& desc, const Vector& a, const Vector& b,
                                    const std::vector<Vector>& z_seq,
                                    const std::vector<double>& eps_schedule) {
  if (z_seq.size() != eps_schedule.size())
    throw std::invalid_argument("midpoint_openness_probe: schedule length mismatch");
  ProbeReport rep;
  rep.all_success = true;
  const double p = desc.family == SetFamily::SimplexDeltaP ? desc.p : 2.0;

  for (std::size_t k = 0; k < z_seq.size(); ++k) {
    ProbeEntry e;
    e.eps = eps_schedule[k];
    try {
      if (is_simplex_shaped(desc.family)) {
        const auto s = delta_p_split(p, a, b, z_seq[k], e.eps);
        e.achieved_eps = s.achieved_eps;
        e.tau = s.tau;
        e.head_dim = s.head_dim;
        e.success = e.achieved_eps < e.eps;
      } else {
        // segment-scaling probe: shrink the translated segment until both
        // endpoints fit in the set
        const Vector v = 0.5 * (a - b);
        double lo = 0.0, hi = 1.0;
        const auto fits = [&](double s) {
          return spaces::contains(desc, (z_seq[k] + s * v).eval()) &&
                 spaces::contains(desc, (z_seq[k] - s * v).eval());
        };
        if (fits(1.0)) {
          lo = 1.0;
        } else {
          for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (fits(mid) ? lo : hi) = mid;
          }
        }
        const Vector x = z_seq[k] + lo * v;
        const Vector y = z_seq[k] - lo * v;
        e.achieved_eps = std::max(spaces::lp_norm((x - a).eval(), p),
                                  spaces::lp_norm((y - b).eval(), p));
        e.head_dim = desc.dim;
        e.success = e.achieved_eps < e.eps;
      }
    } catch (const std::exception& ex) {
      e.success = false;
      e.error = ex.what();
    }
    rep.all_success = rep.all_success && e.success;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

double ball_bound(double z_norm, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("ball_bound: delta must be positive");
  if (z_norm > 1.0 + 1e-12) throw std::invalid_argument("ball_bound: z must lie in the unit ball");
  if (!(z_norm > 1.0 - delta))
    throw std::invalid_argument("ball_bound: requires ||z|| > 1 - delta");
  const double num = delta * delta - (1.0 - z_norm * z_norm);
  const double den = delta * delta - (1.0 - z_norm) * (1.0 - z_norm);
  return num / den;
}

double ball_bound(const Vector& z, double delta) { return ball_bound(z.norm(), delta); }

FiniteMeasure two_point_adversary(const Vector& z, double delta) {
  const double zn = z.norm();
  const double r = ball_bound(zn, delta);
  const Index d = z.size();
  if (d < 2) throw std::invalid_argument("two_point_adversary: needs dimension >= 2");

  const Vector zhat = z / zn;
  // any unit vector orthogonal to z
  Vector u = Vector::Zero(d);
  Index imin;
  zhat.cwiseAbs().minCoeff(&imin);
  u[imin] = 1.0;
  u -= zhat.dot(u) * zhat;
  u /= u.norm();

  // sphere circle at distance exactly delta from z
  const double h = (1.0 + zn * zn - delta * delta) / (2.0 * zn);
  const double w = std::sqrt(std::max(0.0, 1.0 - h * h));
  const Vector yp = h * zhat + w * u;
  const Vector ym = h * zhat - w * u;

  if (r >= 0.0) {
    // mass 1 - r on the circle pair, the rest on the sphere point above z
    const double m = 1.0 - r;
    std::vector<Vector> atoms{yp, ym, zhat};
    Vector weights(3);
    weights << m / 2.0, m / 2.0, 1.0 - m;
    return FiniteMeasure(std::move(atoms), std::move(weights));
  }

  // vacuous-bound regime: the whole mass can avoid the delta-ball; balance
  // the circle pair against the inner point at distance delta below z
  const double m = delta / (h - zn + delta);
  std::vector<Vector> atoms{yp, ym, (zn - delta) * zhat};
  Vector weights(3);
  weights << m / 2.0, m / 2.0, 1.0 - m;
  return FiniteMeasure(std::move(atoms), std::move(weights));
}

AdversaryResult ball_bound_adversary(const Vector& z, double delta, int trials,
                                     std::uint64_t seed) {
  const double zn = z.norm();
  const double r = ball_bound(zn, delta);
  const Index d = z.size();

  AdversaryResult out;
  out.bound = 1.0 - r;

  const auto outside = [&](const Vector& y) { return (y - z).norm() > delta - 1e-9; };

  for (int t = 0; t < trials; ++t) {
    auto rng = make_rng(seed, static_cast<std::uint64_t>(t));
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<Vector> atoms;
    atoms.push_back(z);
    if (d >= 2) {
      const auto tight = two_point_adversary(z, delta);
      atoms.insert(atoms.end(), tight.atoms.begin(), tight.atoms.end());
    }
    atoms.push_back(z / zn);
    atoms.push_back(-(z / zn));
    const int samples = 8 + 4 * static_cast<int>(d);
    for (int sidx = 0; sidx < samples; ++sidx) {
      Vector g(d);
      for (Index i = 0; i < d; ++i) g[i] = gauss(rng);
      const double gn = g.norm();
      if (gn < 1e-12) continue;
      const double radius = 0.25 * (1 + sidx % 4);  // sphere shells
      atoms.push_back((radius / gn) * g);
    }

    const Index m = static_cast<Index>(atoms.size());
    lp::Problem prob;
    prob.c.resize(m);
    for (Index j = 0; j < m; ++j)
      prob.c[j] = outside(atoms[static_cast<std::size_t>(j)]) ? -1.0 : 0.0;
    prob.eq_lhs.resize(d + 1, m);
    prob.eq_rhs.resize(d + 1);
    for (Index j = 0; j < m; ++j)
      prob.eq_lhs.block(0, j, d, 1) = atoms[static_cast<std::size_t>(j)];
    prob.eq_lhs.row(d).setOnes();
    prob.eq_rhs.head(d) = z;
    prob.eq_rhs[d] = 1.0;

    const auto sol = lp::solve(prob);
    ++out.trials_run;
    if (!sol.optimal()) {
      ++out.trials_skipped;
      continue;
    }
    const double mass = -sol.objective;
    if (mass > out.max_outside_mass) {
      out.max_outside_mass = mass;
      Vector wts = sol.x.cwiseMax(0.0);
      wts /= wts.sum();
      out.best_measure = FiniteMeasure(atoms, wts).deduplicated(1e-10, 1e-12);
    }
  }
  return out;
}

std::vector<ContinuityEntry> ball_hull_continuity(const ObjectiveFunction& f,
                                                  const Vector& x_on_sphere,
                                                  const std::vector<Vector>& z_seq,
                                                  const ContinuityConfig& cfg) {
  if (std::abs(x_on_sphere.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("ball_hull_continuity: x must lie on the unit sphere");
  if (!cfg.modulus)
    throw std::invalid_argument("ball_hull_continuity: continuity modulus required");
  const auto ball = spaces::SetDescriptor::unit_ball(x_on_sphere.size());
  const double fsup = std::max(std::abs(f.lower_bound), std::abs(f.upper_bound));
  const double fx = f(x_on_sphere);

  std::vector<ContinuityEntry> out;
  for (std::size_t k = 0; k < z_seq.size(); ++k) {
    const Vector& z = z_seq[k];
    ContinuityEntry e;
    e.z_norm = z.norm();
    const double eta = std::max({(z - x_on_sphere).norm(), 1.0 - e.z_norm, 1e-15});
    e.delta = k < cfg.deltas.size() ? cfg.deltas[k] : std::pow(eta, 0.25);
    e.r = ball_bound(e.z_norm, e.delta);
    e.bound = cfg.modulus(2.0 * e.delta) * e.r + fsup * (1.0 - e.r);
    const auto sol = hull::co_f_search(ball, f, z, cfg.search);
    e.solver_gap = std::abs(sol.value - fx);
    e.within = e.solver_gap <= e.bound + cfg.slack;
    out.push_back(e);
  }
  return out;
}

SeparatorResult extreme_point_separator(const Vector& x0, const Vector& x1, const Vector& x2) {
  if (x0.size() != x1.size() || x1.size() != x2.size())
    throw std::invalid_argument("extreme_point_separator: dimension mismatch");
  if ((x1 - x2).norm() < 1e-12)
    throw std::invalid_argument("extreme_point_separator: x1 and x2 must differ");
  if ((x0 - 0.5 * (x1 + x2)).norm() > 1e-9 * (1.0 + x0.norm()))
    throw std::invalid_argument("extreme_point_separator: x0 is not the midpoint of [x1, x2]");

  SeparatorResult out;
  out.a = hull::AffineWitness{x1 - x2, 0.0};
  const Vector slope = out.a.slope;
  out.f = [slope](const Vector& y) {
    const double v = slope.dot(y);
    return -v * v;
  };
  out.a_x1 = out.a(x1);
  out.a_x2 = out.a(x2);
  const double diff = out.a_x1 - out.a_x2;
  out.gap = diff * diff / 4.0;
  return out;
}

}  // namespace mukit::stability
