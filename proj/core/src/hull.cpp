#include "mukit/hull.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "mukit/linprog.hpp"

namespace mukit::hull {
namespace {

std::string serialize_for_tiebreak(const FiniteMeasure& mu) {
  std::string s;
  char buf[64];
  for (std::size_t i = 0; i < mu.atoms.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g|", mu.weights[static_cast<Index>(i)]);
    s += buf;
    for (Index k = 0; k < mu.atoms[i].size(); ++k) {
      std::snprintf(buf, sizeof(buf), "%.17g,", mu.atoms[i][k]);
      s += buf;
    }
    s += ';';
  }
  return s;
}

// Extreme points aligned with x itself; they let the LP close decompositions
// that pass exactly through x (e.g. antipodal sphere points on the ball).
void directed_anchors(const SetDescriptor& desc, const Vector& x, std::vector<Vector>& pool) {
  using spaces::SetFamily;
  switch (desc.family) {
    case SetFamily::UnitBall: {
      const double n = x.norm();
      if (n > 1e-14) {
        pool.push_back(x / n);
        pool.push_back(-x / n);
      }
      break;
    }
    case SetFamily::LpConeBounded: {
      const double n = spaces::lp_norm(x, desc.p);
      if (n > 1e-14) pool.push_back((x / n).cwiseMax(0.0));
      break;
    }
    case SetFamily::HilbertCube: {
      Vector corner(desc.dim);
      for (Index i = 0; i < desc.dim; ++i)
        corner[i] = x[i] >= 0 ? desc.a[i] : -desc.a[i];
      pool.push_back(corner);
      break;
    }
    default:
      break;
  }
}

void dedup_pool(std::vector<Vector>& pool, double tol = 1e-10) {
  std::vector<Vector> out;
  for (const auto& v : pool) {
    bool dup = false;
    for (const auto& w : out)
      if ((v - w).norm() < tol) { dup = true; break; }
    if (!dup) out.push_back(v);
  }
  pool.swap(out);
}

struct WeightLpResult {
  bool ok = false;
  Vector weights;
  double value = 0.0;
};

// min sum_i pi_i f(a_i)  s.t.  sum pi_i a_i = x, sum pi_i = 1, pi >= 0.
WeightLpResult solve_weight_lp(const std::vector<Vector>& atoms,
                               const std::vector<double>& values, const Vector& x) {
  const Index n = static_cast<Index>(atoms.size());
  const Index d = x.size();
  lp::Problem prob;
  prob.c.resize(n);
  for (Index j = 0; j < n; ++j) prob.c[j] = values[static_cast<std::size_t>(j)];
  prob.eq_lhs.resize(d + 1, n);
  prob.eq_rhs.resize(d + 1);
  for (Index j = 0; j < n; ++j) prob.eq_lhs.block(0, j, d, 1) = atoms[static_cast<std::size_t>(j)];
  prob.eq_lhs.row(d).setOnes();
  prob.eq_rhs.head(d) = x;
  prob.eq_rhs[d] = 1.0;

  const auto sol = lp::solve(prob);
  WeightLpResult res;
  if (!sol.optimal()) return res;
  res.ok = true;
  res.weights = sol.x.cwiseMax(0.0);
  const double s = res.weights.sum();
  if (s <= 0) { res.ok = false; return res; }
  res.weights /= s;
  res.value = 0.0;
  for (Index j = 0; j < n; ++j)
    res.value += res.weights[j] * values[static_cast<std::size_t>(j)];
  return res;
}

}  // namespace

double co_f_simplex_exact(const std::vector<double>& vertex_values,
                          const std::vector<double>& barycentric_coords,
                          double coord_tol) {
  if (vertex_values.size() != barycentric_coords.size())
    throw std::invalid_argument("co_f_simplex_exact: coordinate/value length mismatch");
  double sum = 0.0, acc = 0.0;
  for (std::size_t i = 0; i < vertex_values.size(); ++i) {
    const double l = barycentric_coords[i];
    if (l < -coord_tol)
      throw std::invalid_argument("co_f_simplex_exact: negative barycentric coordinate");
    sum += l;
    acc += l * vertex_values[i];
  }
  if (std::abs(sum - 1.0) > std::max(coord_tol, 1e-9))
    throw std::invalid_argument("co_f_simplex_exact: coordinates must sum to 1");
  return acc;
}

HullSolution co_f_search(const SetDescriptor& desc, const ObjectiveFunction& f,
                         const Vector& x, const SearchConfig& cfg) {
  desc.validate();
  if (x.size() != desc.dim) throw std::invalid_argument("co_f_search: dimension mismatch");
  if (!spaces::contains(desc, x))
    throw std::invalid_argument("co_f_search: query point is outside the set");

  const double fx = f(x);

  struct Candidate {
    double value;
    FiniteMeasure mu;
    int iterations;
  };
  std::optional<Candidate> best;

  const auto consider = [&](Candidate cand) {
    if (!best || cand.value < best->value) {
      best = std::move(cand);
    } else if (cand.value == best->value &&
               serialize_for_tiebreak(cand.mu) < serialize_for_tiebreak(best->mu)) {
      best = std::move(cand);
    }
  };

  // the trivial decomposition is always a candidate: value <= f(x)
  consider({fx, FiniteMeasure::dirac(x), 0});

  int total_iterations = 0;
  for (int restart = 0; restart < cfg.restarts; ++restart) {
    auto rng = make_rng(cfg.seed, static_cast<std::uint64_t>(restart));
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<Vector> pool;
    pool.push_back(x);
    for (auto& v : spaces::anchor_extreme_points(desc, desc.dim + 1)) pool.push_back(std::move(v));
    directed_anchors(desc, x, pool);
    for (const auto& w : cfg.warm_atoms)
      if (w.size() == desc.dim && spaces::contains(desc, w)) pool.push_back(w);
    for (int s = 0; s < cfg.extreme_samples; ++s)
      pool.push_back(spaces::sample_extreme_point(desc, rng));
    dedup_pool(pool);

    std::vector<Vector> support;   // incumbent support carried across rounds
    double incumbent = fx;
    FiniteMeasure inc_mu = FiniteMeasure::dirac(x);
    int iters = 0;
    double scale = cfg.perturb_scale;

    for (int round = 0; round < cfg.rounds; ++round) {
      std::vector<Vector> atoms = pool;
      for (const auto& s : support) {
        atoms.push_back(s);
        for (int k = 0; k < cfg.perturbations_per_atom; ++k) {
          Vector g(desc.dim);
          for (Index i = 0; i < desc.dim; ++i) g[i] = gauss(rng);
          atoms.push_back(spaces::project_into(desc, s + scale * g));
        }
      }
      dedup_pool(atoms);

      std::vector<double> values(atoms.size());
      for (std::size_t i = 0; i < atoms.size(); ++i) values[i] = f(atoms[i]);

      const auto res = solve_weight_lp(atoms, values, x);
      ++iters;
      if (!res.ok) break;  // cannot happen with delta_x in the pool, but stay safe

      std::vector<Vector> new_support;
      std::vector<Vector> mu_atoms;
      std::vector<double> mu_w;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (res.weights[static_cast<Index>(i)] > 1e-12) {
          new_support.push_back(atoms[i]);
          mu_atoms.push_back(atoms[i]);
          mu_w.push_back(res.weights[static_cast<Index>(i)]);
        }
      }
      Vector w = Eigen::Map<Vector>(mu_w.data(), static_cast<Index>(mu_w.size()));
      w /= w.sum();
      FiniteMeasure mu(mu_atoms, w);

      const double improvement = incumbent - res.value;
      if (res.value < incumbent) {
        incumbent = res.value;
        inc_mu = mu.deduplicated();
      }
      support = std::move(new_support);
      scale *= 0.5;
      if (round > 0 && improvement < cfg.tol) break;
    }
    total_iterations += iters;
    consider({incumbent, inc_mu, iters});
  }

  HullSolution out;
  out.restarts_used = cfg.restarts;
  out.iterations = total_iterations;
  out.heuristic = !(f.declared_concave || f.declared_convex);

  if (best->value >= fx - 1e-12) {
    // nothing beats the trivial decomposition (convex f, or x extreme)
    out.value = fx;
    out.decomposition = FiniteMeasure::dirac(x);
  } else {
    out.value = best->value;
    out.decomposition = best->mu;
  }

  // recompute the certified value from the reported decomposition
  double recompute = 0.0;
  for (std::size_t i = 0; i < out.decomposition.atoms.size(); ++i)
    recompute += out.decomposition.weights[static_cast<Index>(i)] * f(out.decomposition.atoms[i]);
  out.value = recompute;

  if (cfg.fit_lower_bound) {
    // best affine minorant on the support atoms, then validated by sampling
    const auto& atoms = out.decomposition.atoms;
    const Index d = desc.dim;
    const Index m = static_cast<Index>(atoms.size());
    lp::Problem fit;
    fit.c = Vector::Zero(d + 1);
    fit.c.head(d) = -x;
    fit.c[d] = -1.0;  // maximize <slope,x> + offset
    fit.ub_lhs.resize(m, d + 1);
    fit.ub_rhs.resize(m);
    for (Index i = 0; i < m; ++i) {
      fit.ub_lhs.block(i, 0, 1, d) = atoms[static_cast<std::size_t>(i)].transpose();
      fit.ub_lhs(i, d) = 1.0;
      fit.ub_rhs[i] = f(atoms[static_cast<std::size_t>(i)]);
    }
    fit.free_vars.assign(static_cast<std::size_t>(d + 1), true);
    const auto fsol = lp::solve(fit);
    if (fsol.optimal()) {
      AffineWitness w{fsol.x.head(d), fsol.x[d]};
      const auto check = affine_minorant_bound(desc, f, x, w, cfg.minorant_samples, cfg.seed, cfg.tol);
      if (check.accepted) {
        out.lower_bound = check.bound;
        out.lower_witness = w;
      }
    }
  }
  return out;
}

MinorantCheck affine_minorant_bound(const SetDescriptor& desc, const ObjectiveFunction& f,
                                    const Vector& x, const AffineWitness& witness,
                                    int samples, std::uint64_t seed, double tol) {
  if (witness.slope.size() != desc.dim)
    throw std::invalid_argument("affine_minorant_bound: slope dimension mismatch");
  auto rng = make_rng(seed, 0xAFF1);
  MinorantCheck out;
  out.worst_violation = 0.0;

  std::vector<Vector> probes = spaces::anchor_extreme_points(desc, desc.dim + 1);
  probes.push_back(x);
  for (int i = 0; i < samples; ++i) {
    probes.push_back(i % 2 == 0 ? spaces::sample_point(desc, rng)
                                : spaces::sample_extreme_point(desc, rng));
  }
  for (const auto& y : probes) {
    const double v = witness(y) - f(y);
    if (v > out.worst_violation) {
      out.worst_violation = v;
      out.witness = y;
    }
  }
  if (out.worst_violation > tol) {
    out.accepted = false;
    return out;
  }
  out.accepted = true;
  out.witness.reset();
  out.bound = witness(x);
  return out;
}

LscProbeResult lsc_probe(const SetDescriptor& desc, const ObjectiveFunction& f,
                         const std::vector<Vector>& sequence, const Vector& limit,
                         const SearchConfig& cfg, int tail_window) {
  if (sequence.empty()) throw std::invalid_argument("lsc_probe: empty sequence");
  for (std::size_t k = 1; k < sequence.size(); ++k) {
    const double prev = (sequence[k - 1] - limit).norm();
    const double cur = (sequence[k] - limit).norm();
    if (cur > prev + 1e-12)
      throw std::invalid_argument("lsc_probe: sequence does not approach the limit");
  }

  LscProbeResult out;
  for (const auto& z : sequence) {
    out.sequence_solutions.push_back(co_f_search(desc, f, z, cfg));
    out.sequence_values.push_back(out.sequence_solutions.back().value);
  }
  out.limit_solution = co_f_search(desc, f, limit, cfg);
  out.limit_value = out.limit_solution.value;

  const std::size_t n = out.sequence_values.size();
  const std::size_t window =
      (tail_window <= 0 || static_cast<std::size_t>(tail_window) > n)
          ? n
          : static_cast<std::size_t>(tail_window);
  double tail_min = out.sequence_values[n - window];
  for (std::size_t k = n - window; k < n; ++k)
    tail_min = std::min(tail_min, out.sequence_values[k]);
  out.gap = out.limit_value - tail_min;
  return out;
}

HullSolution co_f_table(const std::vector<Vector>& points, const std::vector<double>& values,
                        const Vector& x) {
  if (points.empty() || points.size() != values.size())
    throw std::invalid_argument("co_f_table: point/value length mismatch");
  const auto res = solve_weight_lp(points, values, x);
  if (!res.ok)
    throw SolverFailure("co_f_table: x is not in the convex hull of the table points");
  std::vector<Vector> atoms;
  std::vector<double> w;
  double value = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double wi = res.weights[static_cast<Index>(i)];
    if (wi > 1e-12) {
      atoms.push_back(points[i]);
      w.push_back(wi);
      value += wi * values[i];
    }
  }
  Vector wv = Eigen::Map<Vector>(w.data(), static_cast<Index>(w.size()));
  wv /= wv.sum();
  HullSolution out;
  out.value = value;
  out.decomposition = FiniteMeasure(std::move(atoms), std::move(wv));
  out.iterations = 1;
  out.restarts_used = 1;
  return out;
}

ObjectiveFunction one_minus_norm(double p) {
  ObjectiveFunction f;
  f.evaluator = [p](const Vector& y) { return 1.0 - spaces::lp_norm(y, p); };
  f.declared_concave = true;
  f.lower_bound = 0.0;
  f.upper_bound = 1.0;
  return f;
}

}  // namespace mukit::hull
