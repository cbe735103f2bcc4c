// Acceptance suite: every release-gating check in one binary, one line per
// criterion. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mukit/hull.hpp"
#include "mukit/mu_cert.hpp"
#include "mukit/quantum.hpp"
#include "mukit/stability.hpp"
#include "support/oracles.hpp"

namespace {

using namespace mukit;
using spaces::SetDescriptor;

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<bool(std::string&)> run;
};

Vector uniform_corner(Index k, Index dim) {
  Vector x = Vector::Zero(dim);
  for (Index i = 0; i < k; ++i) x[i] = 1.0 / static_cast<double>(k);
  return x;
}

char buf[512];

std::string fmt(const char* pattern, ...) {
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof(buf), pattern, args);
  va_end(args);
  return buf;
}

// --- criterion 1: l.s.c. gap of the hull along the corner sequence ----------

bool crit_lsc_gap(std::string& detail) {
  const Index dim = 16;
  const auto desc = SetDescriptor::lp_cone(2.0, dim);
  const auto f = hull::one_minus_norm(2.0);
  std::vector<Vector> seq;
  for (Index k = 1; k <= dim; ++k) seq.push_back(uniform_corner(k, dim));
  hull::SearchConfig cfg;
  cfg.restarts = 8;
  cfg.seed = kDefaultSeed;
  const auto probe = hull::lsc_probe(desc, f, seq, Vector::Zero(dim), cfg);
  detail = fmt("gap=%.12f", probe.gap);
  return std::abs(probe.gap - 1.0) <= 1e-9;
}

// --- criterion 2: ball bound closed form and LP adversary, dims 2..8 --------

bool crit_ball_bound(std::string& detail) {
  const double r = stability::ball_bound(0.9, 0.5);
  if (std::abs(r - 0.25) > 1e-15) {
    detail = fmt("closed form r=%.17g != 0.25", r);
    return false;
  }
  double worst_excess = -1.0;
  Index worst_dim = 0;
  for (Index dim = 2; dim <= 8; ++dim) {
    Vector z = Vector::Zero(dim);
    z[0] = 0.9;
    const auto adv = stability::ball_bound_adversary(z, 0.5, 1000, derive_seed(kDefaultSeed, dim));
    const double excess = adv.max_outside_mass - adv.bound;
    if (excess > worst_excess) {
      worst_excess = excess;
      worst_dim = dim;
    }
    if (adv.max_outside_mass > adv.bound + 1e-7) {
      detail = fmt("dim %ld exceeded: %.12f > %.12f + 1e-7", long(dim), adv.max_outside_mass,
                   adv.bound);
      return false;
    }
  }
  detail = fmt("r=0.25, worst adversary excess %.3g at dim %ld (7000 LP trials)", worst_excess,
               long(worst_dim));
  return true;
}

// --- criterion 3: block witnesses on the l_p simplex for prefixes up to 1e4 --

bool crit_deltap(std::string& detail) {
  int count = 0;
  // matches e_i with i > prefix (1-based), the escape set of the witness
  const auto outside_prefix = [](const Vector& y, Index prefix) {
    Index hot = -1;
    for (Index i = 0; i < y.size(); ++i) {
      if (y[i] == 1.0 && hot < 0)
        hot = i;
      else if (y[i] != 0.0)
        return false;
    }
    return hot >= prefix;
  };
  const auto check_one = [&](int r, Index prefix) {
    const Index L = static_cast<Index>(
        std::ceil(std::pow(double(r), 1.0 / (2.0 - 1.0)) - 1e-12));
    const Index dim = prefix + 8 * L + 16;
    const auto ref = cert::delta_p_refute(2.0, r, 0.25, prefix, dim);
    // exactly the whole unit of mass escapes: no atom inside the prefix
    // candidate, and the weights carry total mass 1
    bool all_outside = true;
    for (const auto& atom : ref.witness.decomposition.atoms)
      all_outside = all_outside && outside_prefix(atom, prefix);
    const bool mass_exact = all_outside &&
                            std::abs(ref.witness.outside_mass - 1.0) <= 1e-12;
    const bool power_ok = ref.in_block_power_sum <= 1.0 / double(r) + 1e-12;
    const bool placed_ok = ref.block_start > prefix;
    ++count;
    return mass_exact && power_ok && placed_ok;
  };
  for (Index prefix = 1; prefix <= 1024; ++prefix)
    if (!check_one(4, prefix)) {
      detail = fmt("failed at prefix %ld", long(prefix));
      return false;
    }
  for (Index prefix = 1031; prefix <= 10000; prefix += 7)
    if (!check_one(4, prefix)) {
      detail = fmt("failed at prefix %ld", long(prefix));
      return false;
    }
  for (Index prefix : {Index(9999), Index(10000)})
    for (int r : {1, 2, 3, 7, 16})
      if (!check_one(r, prefix)) {
        detail = fmt("failed at prefix %ld, r=%d", long(prefix), r);
        return false;
      }
  detail = fmt("%d witnesses, outside mass 1, power sums under 1/r", count);
  return true;
}

// --- criterion 4: harmonic witness on the bounded positive l2 cone -----------

bool crit_ap(std::string& detail) {
  const Index dim = 10000;
  const auto ref = cert::ap_refute(2.0, 10, dim);
  const auto desc = SetDescriptor::lp_cone(2.0, dim);
  bool atoms_inside = true;
  for (const auto& a : ref.witness.decomposition.atoms)
    atoms_inside = atoms_inside && spaces::contains(desc, a);
  const double bary_err =
      (measures::barycenter(ref.witness.decomposition) - ref.witness.point).cwiseAbs().maxCoeff();
  detail = fmt("outside mass %.6f in (1/3, 2/3), atoms inside=%d, barycenter err %.2g",
               ref.witness.outside_mass, int(atoms_inside), bary_err);
  return ref.witness.outside_mass > 1.0 / 3.0 && ref.witness.outside_mass < 2.0 / 3.0 &&
         atoms_inside && bary_err <= 1e-12;
}

// --- criterion 5: the increasing affine family never fails the tail check ----

bool crit_l1_certificate(std::string& detail) {
  auto rng = make_rng(kDefaultSeed, 5);
  std::uniform_int_distribution<Index> dims(2, 256);
  std::uniform_int_distribution<int> natoms(2, 24);
  std::uniform_real_distribution<double> ueps(0.02, 0.98);
  std::exponential_distribution<double> expo(1.0);

  for (int trial = 0; trial < 10000; ++trial) {
    const Index dim = dims(rng);
    const auto desc = SetDescriptor::l1_cone(dim);
    const int k = natoms(rng);
    std::vector<Vector> atoms;
    Vector w(k);
    for (int i = 0; i < k; ++i) {
      atoms.push_back(i % 3 == 0 ? spaces::sample_extreme_point(desc, rng)
                                 : spaces::sample_point(desc, rng));
      w[i] = expo(rng) + 1e-6;
    }
    w /= w.sum();
    const measures::FiniteMeasure mu(atoms, w);
    const Vector x = measures::barycenter(mu);

    cert::AffineCertificate h;
    h.h.resize(dim);
    for (Index i = 0; i < dim; ++i) h.h[i] = static_cast<double>(i + 1);
    const auto res = cert::tail_certificate_check(h, x, mu, ueps(rng));
    if (!res.passed) {
      detail = fmt("trial %d failed with outside mass %.6f", trial, res.outside_mass);
      return false;
    }
  }
  detail = "10000 random decompositions, no failure";
  return true;
}

// --- criterion 6: the midpoint splitter on 1000 seeded instances -------------

bool crit_split(std::string& detail) {
  const Index n = 64;
  const double eps = 0.05;
  const auto simplex = SetDescriptor::standard_simplex(n);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    auto rng = make_rng(kDefaultSeed, 6000 + t);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> umag(0.0, 0.99);
    const auto a = testing::random_simplex_point(n, 0.85, rng);
    const auto b = testing::random_simplex_point(n, 0.80, rng);
    Vector noise(n);
    for (Index i = 0; i < n; ++i) noise[i] = gauss(rng);
    noise *= (umag(rng) * eps / 6.0) / spaces::lp_norm(noise, 2.0);
    const Vector z = spaces::project_into(simplex, (0.5 * (a + b) + noise).eval());

    stability::SplitResult s;
    try {
      s = stability::delta_p_split(2.0, a, b, z, eps);
    } catch (const std::exception& e) {
      detail = fmt("instance %d raised: %s", t, e.what());
      return false;
    }
    for (Index k = 0; k < n; ++k) {
      if ((s.x[k] + s.y[k]) / 2.0 != z[k]) {
        detail = fmt("instance %d midpoint not exact at coordinate %ld", t, long(k));
        return false;
      }
    }
    if (!spaces::contains(simplex, s.x) || !spaces::contains(simplex, s.y)) {
      detail = fmt("instance %d left the simplex", t);
      return false;
    }
    if (!(s.achieved_eps < eps)) {
      detail = fmt("instance %d achieved %.6f >= eps", t, s.achieved_eps);
      return false;
    }
    worst = std::max(worst, s.achieved_eps);
  }
  detail = fmt("1000 instances, exact midpoints, worst achieved eps %.6f < %.2f", worst, eps);
  return true;
}

// --- criterion 7: hull search vs the exact simplex envelope ------------------

bool crit_hull_oracle(std::string& detail) {
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    auto rng = make_rng(kDefaultSeed, 7000 + t);
    std::uniform_int_distribution<Index> dims(2, 10);
    std::uniform_int_distribution<int> pieces(3, 6);
    const Index dim = dims(rng);
    const auto f_raw = testing::random_concave(dim, pieces(rng), rng);
    hull::ObjectiveFunction f;
    f.evaluator = [&f_raw](const Vector& y) { return f_raw(y); };
    f.declared_concave = true;
    const Vector x = testing::random_simplex_point(dim, 0.9, rng);

    std::vector<double> values{f_raw(Vector::Zero(dim))};
    std::vector<double> coords{1.0 - x.sum()};
    for (Index i = 1; i <= dim; ++i) {
      values.push_back(f_raw(spaces::canonical_basis(i, dim)));
      coords.push_back(x[i - 1]);
    }
    const double exact = hull::co_f_simplex_exact(values, coords);

    hull::SearchConfig cfg;
    cfg.restarts = 6;
    cfg.seed = derive_seed(kDefaultSeed, 7000 + t);
    const auto sol = hull::co_f_search(SetDescriptor::standard_simplex(dim), f, x, cfg);
    const double err = std::abs(sol.value - exact);
    worst = std::max(worst, err);
    if (err > 1e-6) {
      detail = fmt("instance %d deviates by %.3g", t, err);
      return false;
    }
  }
  detail = fmt("1000 objectives, worst |search - exact| = %.3g", worst);
  return true;
}

// --- criterion 8: convex-roof checks ------------------------------------------

bool crit_roof(std::string& detail) {
  const auto f2 = [](const quantum::DensityMatrix& r) { return quantum::f_alpha(r, 2.0); };

  // pure shortcut must be bit-exact against the direct evaluation
  const auto bell = quantum::DensityMatrix::from_pure(quantum::bell_phi_plus(), 2, 2);
  const auto pure_res = quantum::roof_optimize(bell, f2);
  const double direct = quantum::f_alpha(quantum::partial_trace(bell), 2.0);
  if (!pure_res.pure_shortcut || std::abs(pure_res.upper_bound - direct) > 1e-12 ||
      std::abs(pure_res.upper_bound - 1.0) > 1e-8) {
    detail = fmt("pure shortcut broke: %.17g vs %.17g", pure_res.upper_bound, direct);
    return false;
  }

  // the classically correlated mixture collapses to zero
  quantum::CMatrix cm = quantum::CMatrix::Zero(4, 4);
  cm(0, 0) = 0.5;
  cm(3, 3) = 0.5;
  quantum::RoofConfig sep_cfg;
  sep_cfg.restarts = 8;
  sep_cfg.seed = kDefaultSeed;
  const auto sep = quantum::roof_optimize(quantum::DensityMatrix(cm, 2, 2), f2, sep_cfg);
  if (sep.upper_bound > 1e-8) {
    detail = fmt("separable mixture bound %.3g > 1e-8", sep.upper_bound);
    return false;
  }

  // optimizer vs brute-force sampling over the same ensemble parameterization
  const auto plus = quantum::bell_phi_plus();
  const auto minus = quantum::bell_phi_minus();
  quantum::CMatrix bm =
      0.75 * (plus * plus.adjoint()) + 0.25 * (minus * minus.adjoint());
  const quantum::DensityMatrix omega(bm, 2, 2);

  quantum::RoofConfig cfg;
  cfg.m = 4;
  cfg.restarts = 64;
  cfg.seed = kDefaultSeed;
  const auto opt = quantum::roof_optimize(omega, f2, cfg);

  Eigen::SelfAdjointEigenSolver<quantum::CMatrix> es(omega.entries);
  std::vector<Index> keep;
  for (Index j = 3; j >= 0; --j)
    if (es.eigenvalues()[j] > 1e-12) keep.push_back(j);
  quantum::CMatrix B(4, static_cast<Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c)
    B.col(static_cast<Index>(c)) =
        std::sqrt(es.eigenvalues()[keep[c]]) * es.eigenvectors().col(keep[c]);

  auto rng = make_rng(kDefaultSeed, 8);
  double oracle = 1e18;
  for (int s = 0; s < 1000000; ++s) {
    const auto V = testing::random_isometry(4, static_cast<Index>(keep.size()), rng);
    const quantum::CMatrix S = B * V.transpose();
    double obj = 0.0;
    for (Index i = 0; i < 4; ++i) {
      const double pi = S.col(i).squaredNorm();
      if (pi < 1e-12) continue;
      // 2x2 reduced state: pi * f2 = 4 |det reshape(phi)|^2 / pi
      const std::complex<double> det = S(0, i) * S(3, i) - S(1, i) * S(2, i);
      obj += 4.0 * std::norm(det) / pi;
    }
    oracle = std::min(oracle, obj);
  }

  // the literal two-sided agreement clause; the optimizer's value is a
  // certified upper bound (recomputed from its decomposition), so the only
  // slack in this comparison is the sampling oracle's own convergence
  const double diff = std::abs(opt.upper_bound - oracle);
  const bool not_worse_than_oracle = opt.upper_bound <= oracle + 1e-3;
  detail = fmt(
      "shortcut exact, separable %.1e, optimizer %.9f vs 1e6-sample oracle %.9f "
      "(two-sided gap %.2e, optimizer-not-worse %s)",
      sep.upper_bound, opt.upper_bound, oracle, diff, not_worse_than_oracle ? "yes" : "NO");
  return diff <= 1e-3;
}

// --- criterion 9: four-route cone equivalences against brute force ------------

bool crit_cones(std::string& detail) {
  auto rng = make_rng(kDefaultSeed, 9);
  std::normal_distribution<double> gauss;
  std::uniform_int_distribution<int> ngen(3, 8);
  int pointed_count = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<Vector> gens;
    Vector axis(3);
    for (Index i = 0; i < 3; ++i) axis[i] = gauss(rng);
    axis /= axis.norm();
    const int m = ngen(rng);
    for (int j = 0; j < m; ++j) {
      Vector w(3);
      for (Index i = 0; i < 3; ++i) w[i] = gauss(rng);
      w -= w.dot(axis) * axis;
      if (w.norm() > 1e-9) w *= 0.9 / w.norm();
      gens.push_back(axis + w);
    }
    if (t % 2 == 1) gens.push_back(-(gens[0] + gens[1]));  // force a line
    Vector offset(3);
    for (Index i = 0; i < 3; ++i) offset[i] = 0.5 * gauss(rng);

    const auto rep = cert::polyhedral_equivalence_check(gens, offset);
    if (!rep.consistent) {
      detail = fmt("instance %d verdicts disagree (i=%d ii=%d iii=%d iv=%d)", t,
                   int(rep.contained_in_pointed_cone), int(rep.has_extreme_point),
                   int(rep.line_free), int(rep.polar_has_interior));
      return false;
    }
    std::vector<Vector> normalized;
    for (const auto& g : gens) normalized.push_back(g.normalized());
    const bool oracle_line = testing::zero_in_hull_bruteforce(normalized);
    if (rep.line_free != !oracle_line) {
      detail = fmt("instance %d disagrees with the brute-force oracle", t);
      return false;
    }
    pointed_count += rep.line_free ? 1 : 0;
  }
  detail = fmt("100 instances consistent and oracle-matched (%d pointed)", pointed_count);
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "hull gap along the corner sequence equals 1", 1.0, crit_lsc_gap},
      {2, "ball bound closed form and LP adversary dims 2-8", 30.0, crit_ball_bound},
      {3, "simplex block witnesses for every prefix level", 1.0, crit_deltap},
      {4, "harmonic cone witness with escaping third of mass", 1.0, crit_ap},
      {5, "increasing affine family certifies the l1 cone", 60.0, crit_l1_certificate},
      {6, "midpoint splitter on 1000 seeded instances", 60.0, crit_split},
      {7, "hull search matches the exact simplex envelope", 120.0, crit_hull_oracle},
      {8, "convex-roof shortcut, separable and oracle checks", 120.0, crit_roof},
      {9, "four-route cone equivalences vs brute force", 10.0, crit_cones},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = secs < c.budget_s;
    ok = ok && in_budget;
    std::printf("[%s] criterion %d: %s (%s; %.2f s, budget %.0f s)\n", ok ? "PASS" : "FAIL",
                c.id, c.title.c_str(), detail.c_str(), secs, c.budget_s);
    if (!ok) ++failed;
  }
  if (failed == 0)
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  else
    std::printf("%d acceptance criteria FAILED\n", failed);
  return failed;
}
