#include "mukit/scenario.hpp"

#include <cmath>

#include "mukit/hull.hpp"
#include "mukit/mu_cert.hpp"
#include "mukit/quantum.hpp"
#include "mukit/stability.hpp"

namespace mukit::scenarios {
namespace {

using io::to_json;
using io::vector_from_json;
using spaces::SetDescriptor;

std::uint64_t name_hash(const std::string& name) {
  std::uint64_t h = 1469598103934665603ull;
  for (const char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

json merged(const json& defaults, const json& overrides) {
  json out = defaults;
  if (overrides.is_object() && !overrides.empty()) out.update(overrides);
  return out;
}

Vector uniform_corner_point(Index k, Index dim) {
  Vector x = Vector::Zero(dim);
  for (Index i = 0; i < k; ++i) x[i] = 1.0 / static_cast<double>(k);
  return x;
}

// interior simplex point with total mass `mass`
Vector random_simplex_interior(Index dim, double mass, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  Vector g(dim);
  for (Index i = 0; i < dim; ++i) g[i] = expo(rng) + 1e-3;
  return (mass / g.sum()) * g;
}

measures::FiniteMeasure random_l1_decomposition(Index dim, std::mt19937_64& rng) {
  const auto desc = SetDescriptor::l1_cone(dim);
  std::uniform_int_distribution<int> natoms(2, 24);
  std::exponential_distribution<double> expo(1.0);
  const int k = natoms(rng);
  std::vector<Vector> atoms;
  Vector w(k);
  for (int i = 0; i < k; ++i) {
    atoms.push_back(i % 3 == 0 ? spaces::sample_extreme_point(desc, rng)
                               : spaces::sample_point(desc, rng));
    w[i] = expo(rng) + 1e-6;
  }
  w /= w.sum();
  return measures::FiniteMeasure(std::move(atoms), std::move(w));
}

Scenario make(std::string name, std::string summary, json defaults,
              std::function<Outcome(const json&, std::uint64_t)> run) {
  return Scenario{std::move(name), std::move(summary), std::move(defaults), std::move(run)};
}

std::vector<Scenario> build_registry() {
  std::vector<Scenario> reg;

  reg.push_back(make(
      "lp-norm-triangle",
      "p-norms are homogeneous and satisfy the triangle inequality on random vectors",
      {{"dim", 16}, {"trials", 200}, {"tol", 1e-12}},
      [](const json& p, std::uint64_t seed) {
        Outcome o;
        o.inputs = p;
        auto rng = make_rng(seed);
        std::normal_distribution<double> gauss;
        const Index dim = p.at("dim");
        const double tol = p.at("tol");
        double worst = 0.0;
        for (int t = 0; t < p.at("trials").get<int>(); ++t) {
          Vector x(dim), y(dim);
          for (Index i = 0; i < dim; ++i) {
            x[i] = gauss(rng);
            y[i] = gauss(rng);
          }
          for (const double q : {1.0, 1.5, 2.0, 3.0, spaces::kInfExponent}) {
            worst = std::max(worst, spaces::lp_norm((x + y).eval(), q) -
                                        (spaces::lp_norm(x, q) + spaces::lp_norm(y, q)));
            worst = std::max(worst, std::abs(spaces::lp_norm((2.5 * x).eval(), q) -
                                             2.5 * spaces::lp_norm(x, q)));
          }
        }
        o.outputs = {{"worst_violation", worst}};
        o.tolerances = {{"tol", tol}};
        o.pass = worst <= tol;
        return o;
      }));

  reg.push_back(make(
      "example-1-lsc-gap",
      "hull values vanish along the uniform corner sequence on the bounded positive l2 "
      "cone while the limit point keeps value 1: the hull is not lower semicontinuous",
      {{"p", 2.0}, {"dim", 16}, {"expected_gap", 1.0}, {"tol", 1e-9}, {"restarts", 8}},
      [](const json& p, std::uint64_t seed) {
        Outcome o;
        o.inputs = p;
        const Index dim = p.at("dim");
        const auto desc = SetDescriptor::lp_cone(p.at("p"), dim);
        const auto f = hull::one_minus_norm(p.at("p"));
        std::vector<Vector> seq;
        for (Index k = 1; k <= dim; ++k) seq.push_back(uniform_corner_point(k, dim));
        hull::SearchConfig cfg;
        cfg.restarts = p.at("restarts");
        cfg.seed = seed;
        const auto probe = hull::lsc_probe(desc, f, seq, Vector::Zero(dim), cfg);
        o.outputs = {{"gap", probe.gap},
                     {"limit_value", probe.limit_value},
                     {"sequence_values", probe.sequence_values}};
        o.tolerances = {{"tol", p.at("tol")}};
        o.pass = std::abs(probe.gap - p.at("expected_gap").get<double>()) <=
                 p.at("tol").get<double>();
        return o;
      }));

  reg.push_back(make(
      "example-1-hull-zero",
      "the hull search certifies value ~0 at the uniform corner point via the basis "
      "decomposition",
      {{"p", 2.0}, {"dim", 8}, {"bound", 1e-8}, {"restarts", 8}},
      [](const json& p, std::uint64_t seed) {
        Outcome o;
        o.inputs = p;
        const Index dim = p.at("dim");
        const auto desc = SetDescriptor::lp_cone(p.at("p"), dim);
        const auto f = hull::one_minus_norm(p.at("p"));
        hull::SearchConfig cfg;
        cfg.restarts = p.at("restarts");
        cfg.seed = seed;
        const auto sol = hull::co_f_search(desc, f, uniform_corner_point(dim, dim), cfg);
        o.outputs = {{"value", sol.value},
                     {"support", sol.decomposition.atoms.size()},
                     {"decomposition", to_json(sol.decomposition)}};
        o.tolerances = {{"bound", p.at("bound")}};
        o.pass = sol.value <= p.at("bound").get<double>();
        return o;
      }));

  reg.push_back(make(
      "lemma-2-ball-bound",
      "closed-form concentration bound r(delta, z) on the unit ball at ||z|| = 0.9, "
      "delta = 0.5",
      {{"z_norm", 0.9}, {"delta", 0.5}, {"expected", 0.25}, {"tol", 1e-15}},
      [](const json& p, std::uint64_t) {
        Outcome o;
        o.inputs = p;
        const double r = stability::ball_bound(p.at("z_norm").get<double>(),
                                               p.at("delta").get<double>());
        o.outputs = {{"r", r}};
        o.tolerances = {{"tol", p.at("tol")}};
        o.pass = std::abs(r - p.at("expected").get<double>()) <= p.at("tol").get<double>();
        return o;
      }));

  reg.push_back(make(
      "lemma-2-two-point",
      "the analytic sphere-pair adversary attains outside mass exactly 1 - r(delta, z)",
      {{"z_norm", 0.9}, {"delta", 0.5}, {"dim", 3}, {"tol", 1e-9}},
      [](const json& p, std::uint64_t) {
        Outcome o;
        o.inputs = p;
        const Index dim = p.at("dim");
        const double delta = p.at("delta");
        Vector z = Vector::Zero(dim);
        z[0] = p.at("z_norm");
        const auto mu = stability::two_point_adversary(z, delta);
        const double r = stability::ball_bound(z, delta);
        // the tight atoms sit on the delta-sphere itself; count them outside
        double outside = measures::mass_outside(
            mu, [&](const Vector& y) { return (y - z).norm() <= delta - 1e-9; });
        const double bary_err = (measures::barycenter(mu) - z).norm();
        o.outputs = {{"outside_mass", outside},
                     {"bound", 1.0 - r},
                     {"barycenter_error", bary_err},
                     {"measure", to_json(mu)}};
        o.tolerances = {{"tol", p.at("tol")}};
        o.pass = std::abs(outside - (1.0 - r)) <= p.at("tol").get<double>() &&
                 bary_err <= p.at("tol").get<double>();
        return o;
      }));

  reg.push_back(make(
      "lemma-2-adversary-d3",
      "LP adversary in dimension 3 never beats the ball concentration bound",
      {{"z_norm", 0.9}, {"delta", 0.5}, {"dim", 3}, {"trials", 1000}, {"slack", 1e-7}},
      [](const json& p, std::uint64_t seed) {
        Outcome o;
        o.inputs = p;
        const Index dim = p.at("dim");
        Vector z = Vector::Zero(dim);
        z[0] = p.at("z_norm");
        const auto res =
            stability::ball_bound_adversary(z, p.at("delta"), p.at("trials"), seed);
        o.outputs = {{"max_outside_mass", res.max_outside_mass},
                     {"bound", res.bound},
                     {"trials_run", res.trials_run},
                     {"trials_skipped", res.trials_skipped}};
        o.tolerances = {{"slack", p.at("slack")}};
        o.pass = res.max_outside_mass <= res.bound + p.at("slack").get<double>();
        return o;
      }));

  reg.push_back(make(
      "deltap-not-mu-compact",
      "block witness on the l_p simplex: unit mass escapes past any basis prefix while "
      "the point stays inside a fixed compact",
      {{"p", 2.0}, {"r", 4}, {"eps", 0.25}, {"prefix", 16}, {"dim", 64}, {"tol", 1e-12}},
      [](const json& p, std::uint64_t) {
        Outcome o;
        o.inputs = p;
        const auto ref = cert::delta_p_refute(p.at("p"), p.at("r"), p.at("eps"),
                                              p.at("prefix"), p.at("dim"));
        const double tol = p.at("tol");
        const double block_cap = 1.0 / p.at("r").get<double>();
        o.outputs = {{"outside_mass", ref.witness.outside_mass},
                     {"block_start", ref.block_start},
                     {"block_length", ref.block_length},
                     {"in_block_power_sum", ref.in_block_power_sum},
                     {"point", to_json(ref.witness.point)}};
        o.tolerances = {{"tol", tol}};
        o.pass = std::abs(ref.witness.outside_mass - 1.0) <= tol &&
                 ref.in_block_power_sum <= block_cap + tol &&
                 ref.block_start > p.at("prefix").get<Index>();
        return o;
      }));

  reg.push_back(make(
      "ap-not-pointwise",
      "harmonic witness on the bounded positive l_p cone: more than a third of the mass "
      "escapes past any basis prefix",
      {{"p", 2.0}, {"prefix", 10}, {"dim", 10000}, {"tol", 1e-12}},
      [](const json& p, std::uint64_t) {
        Outcome o;
        o.inputs = p;
        const auto ref = cert::ap_refute(p.at("p"), p.at("prefix"), p.at("dim"));
        const auto desc = SetDescriptor::lp_cone(p.at("p"), p.at("dim"));
        bool atoms_inside = true;
        for (const auto& a : ref.witness.decomposition.atoms)
          atoms_inside = atoms_inside && spaces::contains(desc, a);
        const double bary_err =
            (measures::barycenter(ref.witness.decomposition) - ref.witness.point).norm();
        o.outputs = {{"outside_mass", ref.witness.outside_mass},
                     {"s", ref.s},
                     {"r", ref.r},
                     {"point_norm_p", ref.point_norm_p},
                     {"rescaled_norm_p", ref.rescaled_norm_p},
                     {"atoms_inside", atoms_inside},
                     {"barycenter_error", bary_err}};
        o.tolerances = {{"tol", p.at("tol")}};
        o.pass = ref.witness.outside_mass > 1.0 / 3.0 &&
                 ref.witness.outside_mass < 2.0 / 3.0 && atoms_inside &&
                 bary_err <= p.at("tol").get<double>();
        return o;
      }));

  reg.push_back(make(
      "l1-cone-certificate",
      "the increasing affine family h_i = i never fails the tail-mass check on random "
      "decompositions over the bounded positive l1 cone",
      {{"dim", 64}, {"trials", 200}},
      [](const json& p, std::uint64_t seed) {
        Outcome o;
        o.inputs = p;
        const Index dim = p.at("dim");
        cert::AffineCertificate h;
        h.h.resize(dim);
        for (Index i = 0; i < dim; ++i) h.h[i] = static_cast<double>(i + 1);
        h.label = "h_i = i";
        auto rng = make_rng(seed);
        std::uniform_real_distribution<double> ueps(0.05, 0.95);
        int failures = 0;
        double worst_margin = 1.0;
        for (int t = 0; t < p.at("trials").get<int>(); ++t) {
          const auto mu = random_l1_decomposition(dim, rng);
          const Vector x = measures::barycenter(mu);
          const double eps = ueps(rng);
          const auto res = cert::tail_certificate_check(h, x, mu, eps);
          if (!res.passed) ++failures;
          worst_margin = std::min(worst_margin, eps - res.outside_mass);
        }
        o.outputs = {{"failures", failures}, {"worst_margin", worst_margin}};
        o.tolerances = json::object();
        o.pass = failures == 0;
        return o;
      }));

  reg.push_back(make(
      "hilbert-cube-compact",
      "geometric side lengths give a summable-tail compactness certificate",
      {{"dim", 64}, {"tol", 1e-9}},
      [](const json& p, std::uint64_t) {
        Outcome o;
        o.inputs = p;
        const Index dim = p.at("dim");
        Vector a(dim);
        for (Index i = 0; i < dim; ++i) a[i] = std::pow(2.0, -static_cast<double>(i + 1));
        const auto cls = cert::hilbert_cube_classify(a, p.at("tol"));
        o.outputs = {{"verdict", cls.verdict == cert::CubeVerdict::CompactCertificate
                                     ? "CompactCertificate"
                                     : "other"},
                     {"suffix_energy", cls.suffix_energy}};
        o.tolerances = {{"tol", p.at("tol")}};
        o.pass = cls.verdict == cert::CubeVerdict::CompactCertificate;
        return o;
      }));

  reg.push_back(make(
      "hilbert-cube-blocks",
      "side lengths 1/sqrt(i) produce unit-energy blocks {1}, {2..4}, ... certifying the "
      "cube is not compact-like",
      {{"dim", 64}},
      [](const json& p, std::uint64_t) {
        Outcome o;
        o.inputs = p;
        const Index dim = p.at("dim");
        Vector a(dim);
        for (Index i = 0; i < dim; ++i) a[i] = 1.0 / std::sqrt(static_cast<double>(i + 1));
        const auto cls = cert::hilbert_cube_classify(a);
        json blocks = json::array();
        bool sums_ok = true;
        for (const auto& bl : cls.blocks) {
          blocks.push_back({{"first", bl.first}, {"last", bl.last}, {"sum_sq", bl.sum_sq}});
          sums_ok = sums_ok && bl.sum_sq >= 1.0;
          sums_ok = sums_ok && std::abs(cert::cube_block_vector(a, bl).squaredNorm() -
                                        bl.sum_sq) <= 1e-12;
        }
        o.outputs = {{"verdict", cls.verdict == cert::CubeVerdict::RefutationBlocks
                                     ? "RefutationBlocks"
                                     : "other"},
                     {"blocks", blocks}};
        o.tolerances = json::object();
        o.pass = cls.verdict == cert::CubeVerdict::RefutationBlocks && sums_ok &&
                 !cls.blocks.empty() && cls.blocks[0].first == 1 && cls.blocks[0].last == 1 &&
                 cls.blocks.size() > 1 && cls.blocks[1].first == 2 && cls.blocks[1].last == 4;
        return o;
      }));

  reg.push_back(make(
      "deltap-split",
      "constructive midpoint split on the l2 simplex: exact midpoint, both endpoints in "
      "the simplex, achieved eps under budget",
      {{"p", 2.0}, {"dim", 64}, {"eps", 0.05}},
      [](const json& p, std::uint64_t seed) {
        Outcome o;
        o.inputs = p;
        const Index dim = p.at("dim");
        const double eps = p.at("eps");
        auto rng = make_rng(seed);
        const Vector a = random_simplex_interior(dim, 0.85, rng);
        const Vector b = random_simplex_interior(dim, 0.8, rng);
        Vector z = 0.5 * (a + b);
        Vector noise(dim);
        std::normal_distribution<double> gauss;
        for (Index i = 0; i < dim; ++i) noise[i] = gauss(rng);
        noise *= (eps / 10.0) / spaces::lp_norm(noise, p.at("p"));
        z += noise;
        z = spaces::project_into(SetDescriptor::standard_simplex(dim), z);
        const auto res = stability::delta_p_split(p.at("p"), a, b, z, eps);
        bool exact_mid = true;
        for (Index k = 0; k < dim; ++k)
          exact_mid = exact_mid && ((res.x[k] + res.y[k]) / 2.0 == z[k]);
        o.outputs = {{"achieved_eps", res.achieved_eps},
                     {"tau", res.tau},
                     {"head_dim", res.head_dim},
                     {"exact_midpoint", exact_mid}};
        o.tolerances = {{"eps", eps}};
        o.pass = exact_mid && res.achieved_eps < eps;
        return o;
      }));

  reg.push_back(make(
      "deltap-extreme-measures-diverge",
      "along the uniform corner sequence the unique extreme-point decompositions keep "
      "unit mass at distance 1 from the limit, so they never approach the Dirac at 0",
      {{"dim", 32}, {"ball_radius", 0.5}},
      [](const json& p, std::uint64_t) {
        Outcome o;
        o.inputs = p;
        const Index dim = p.at("dim");
        const double radius = p.at("ball_radius");
        json masses = json::array();
        json norms = json::array();
        bool all_unit = true;
        for (Index n = 1; n <= dim; ++n) {
          // x_n = (1/n, ..., 1/n, 0, ...) decomposes uniquely over {0, e_i}
          std::vector<Vector> atoms;
          for (Index i = 1; i <= n; ++i) atoms.push_back(spaces::canonical_basis(i, dim));
          const auto mu = measures::FiniteMeasure::uniform(atoms);
          const double away = measures::mass_outside(
              mu, [&](const Vector& y) { return y.norm() <= radius; });
          const double near = measures::mass_outside(
              mu, [&](const Vector& y) { return y.norm() > radius; });
          masses.push_back(away);
          norms.push_back(measures::barycenter(mu).norm());
          all_unit = all_unit && near == 0.0 && std::abs(away - 1.0) <= 1e-12;
        }
        o.outputs = {{"mass_away_from_limit", masses},
                     {"barycenter_norms", norms},
                     {"all_unit", all_unit}};
        o.tolerances = {{"ball_radius", radius}};
        // barycenters vanish while the measures stay at distance 1 in mass
        o.pass = all_unit &&
                 norms.back().get<double>() < 0.2 && norms.front().get<double>() == 1.0;
        return o;
      }));

  reg.push_back(make(
      "ball-openness-probe",
      "segment-scaling midpoint probe on the unit ball succeeds along a contracting "
      "perturbation sequence",
      {{"dim", 8}, {"steps", 10}},
      [](const json& p, std::uint64_t seed) {
        Outcome o;
        o.inputs = p;
        const Index dim = p.at("dim");
        auto rng = make_rng(seed);
        const auto ball = SetDescriptor::unit_ball(dim);
        const Vector a = 0.7 * spaces::sample_extreme_point(ball, rng);
        const Vector b = 0.5 * spaces::sample_extreme_point(ball, rng);
        const Vector c = 0.5 * (a + b);
        std::vector<Vector> zs;
        std::vector<double> eps;
        Vector dir(dim);
        std::normal_distribution<double> gauss;
        for (Index i = 0; i < dim; ++i) dir[i] = gauss(rng);
        dir /= dir.norm();
        for (int k = 0; k < p.at("steps").get<int>(); ++k) {
          const double off = 0.02 * std::pow(0.5, k);
          zs.push_back(c + off * dir);
          eps.push_back(std::max(1e-6, 40.0 * off));
        }
        const auto rep = stability::midpoint_openness_probe(ball, a, b, zs, eps);
        json achieved = json::array();
        for (const auto& e : rep.entries) achieved.push_back(e.achieved_eps);
        o.outputs = {{"achieved", achieved}, {"all_success", rep.all_success}};
        o.tolerances = json::object();
        o.pass = rep.all_success;
        return o;
      }));

  reg.push_back(make(
      "simplex-hull-oracle",
      "the LP hull search reproduces the exact barycentric envelope of a concave "
      "piecewise-linear objective on the standard simplex",
      {{"dim", 6}, {"pieces", 4}, {"tol", 1e-6}, {"restarts", 8}},
      [](const json& p, std::uint64_t seed) {
        Outcome o;
        o.inputs = p;
        const Index dim = p.at("dim");
        auto rng = make_rng(seed);
        std::normal_distribution<double> gauss;
        std::vector<Vector> slopes;
        std::vector<double> offsets;
        for (int j = 0; j < p.at("pieces").get<int>(); ++j) {
          Vector s(dim);
          for (Index i = 0; i < dim; ++i) s[i] = gauss(rng);
          slopes.push_back(s);
          offsets.push_back(1.0 + 0.2 * gauss(rng));
        }
        hull::ObjectiveFunction f;
        f.declared_concave = true;
        f.evaluator = [slopes, offsets](const Vector& y) {
          double v = std::numeric_limits<double>::infinity();
          for (std::size_t j = 0; j < slopes.size(); ++j)
            v = std::min(v, slopes[j].dot(y) + offsets[j]);
          return v;
        };
        const auto desc = SetDescriptor::standard_simplex(dim);
        const Vector x = random_simplex_interior(dim, 0.9, rng);
        std::vector<double> vertex_values{f.evaluator(Vector::Zero(dim))};
        std::vector<double> coords{1.0 - x.sum()};
        for (Index i = 1; i <= dim; ++i) {
          vertex_values.push_back(f.evaluator(spaces::canonical_basis(i, dim)));
          coords.push_back(x[i - 1]);
        }
        const double exact = hull::co_f_simplex_exact(vertex_values, coords);
        hull::SearchConfig cfg;
        cfg.restarts = p.at("restarts");
        cfg.seed = seed;
        const auto sol = hull::co_f_search(desc, f, x, cfg);
        o.outputs = {{"search_value", sol.value}, {"exact_value", exact}};
        o.tolerances = {{"tol", p.at("tol")}};
        o.pass = std::abs(sol.value - exact) <= p.at("tol").get<double>();
        return o;
      }));

  reg.push_back(make(
      "separator-gap",
      "the concave square-of-affine witness separates a proper midpoint with gap "
      "||x1 - x2||^4 / 4",
      {{"dim", 3}, {"tol", 1e-10}},
      [](const json& p, std::uint64_t) {
        Outcome o;
        o.inputs = p;
        const Index dim = p.at("dim");
        const Vector x1 = 2.0 * spaces::canonical_basis(1, dim);
        const Vector x2 = Vector::Zero(dim);
        const Vector x0 = 0.5 * (x1 + x2);
        const auto sep = stability::extreme_point_separator(x0, x1, x2);
        const double closed_form = std::pow((x1 - x2).norm(), 4) / 4.0;
        o.outputs = {{"gap", sep.gap},
                     {"closed_form", closed_form},
                     {"a_x1", sep.a_x1},
                     {"a_x2", sep.a_x2}};
        o.tolerances = {{"tol", p.at("tol")}};
        o.pass = std::abs(sep.gap - closed_form) <= p.at("tol").get<double>() && sep.gap > 0;
        return o;
      }));

  reg.push_back(make(
      "choquet-jensen",
      "the two-point measure on {0, 1} dominates the Dirac at 1/2 on the convex family "
      "{t^2}",
      {{"tol", 1e-12}},
      [](const json& p, std::uint64_t) {
        Outcome o;
        o.inputs = p;
        Vector zero(1), one(1), half(1);
        zero << 0.0;
        one << 1.0;
        half << 0.5;
        measures::FiniteMeasure mu({zero, one}, Vector::Constant(2, 0.5));
        measures::FiniteMeasure nu = measures::FiniteMeasure::dirac(half);
        measures::ConvexTestFamily fam;
        fam.functions.push_back([](const Vector& t) { return t[0] * t[0]; });
        fam.labels.push_back("t^2");
        const auto verdict = measures::choquet_compare(mu, nu, fam, p.at("tol"));
        o.outputs = {{"verdict", measures::to_string(verdict)}};
        o.tolerances = {{"tol", p.at("tol")}};
        o.pass = verdict == measures::ChoquetVerdict::DominatesOnFamily;
        return o;
      }));

  reg.push_back(make(
      "cone-pointed-orthant",
      "the positive orthant cone passes all four pointedness routes",
      {{"dim", 3}},
      [](const json& p, std::uint64_t) {
        Outcome o;
        o.inputs = p;
        const Index dim = p.at("dim");
        std::vector<Vector> gens;
        for (Index i = 1; i <= dim; ++i) gens.push_back(spaces::canonical_basis(i, dim));
        const auto rep = cert::polyhedral_equivalence_check(gens, Vector::Zero(dim));
        o.outputs = {{"contained_in_pointed_cone", rep.contained_in_pointed_cone},
                     {"has_extreme_point", rep.has_extreme_point},
                     {"line_free", rep.line_free},
                     {"polar_has_interior", rep.polar_has_interior},
                     {"polar_ball_radius", rep.polar_ball_radius},
                     {"consistent", rep.consistent}};
        o.tolerances = json::object();
        o.pass = rep.consistent && rep.line_free;
        return o;
      }));

  reg.push_back(make(
      "cone-halfplane",
      "a half-plane contains a line and fails all four pointedness routes",
      {{"dim", 2}},
      [](const json& p, std::uint64_t) {
        Outcome o;
        o.inputs = p;
        std::vector<Vector> gens;
        Vector g1(2), g2(2), g3(2);
        g1 << 1, 0;
        g2 << -1, 0;
        g3 << 0, 1;
        gens = {g1, g2, g3};
        const auto rep = cert::polyhedral_equivalence_check(gens, Vector::Zero(2));
        const auto cls = cert::pointed_cone_classify(gens);
        o.outputs = {{"contained_in_pointed_cone", rep.contained_in_pointed_cone},
                     {"has_extreme_point", rep.has_extreme_point},
                     {"line_free", rep.line_free},
                     {"polar_has_interior", rep.polar_has_interior},
                     {"consistent", rep.consistent},
                     {"classifier", cls.kind == cert::ConeKind::ContainsLine
                                        ? "ContainsLine"
                                        : "other"}};
        o.tolerances = json::object();
        o.pass = rep.consistent && !rep.line_free &&
                 cls.kind == cert::ConeKind::ContainsLine;
        return o;
      }));

  reg.push_back(make(
      "phi-plus-f2",
      "the maximally entangled two-qubit state has roof value 1 under f_2 (pure-state "
      "shortcut)",
      {{"expected", 1.0}, {"tol", 1e-8}},
      [](const json& p, std::uint64_t seed) {
        Outcome o;
        o.inputs = p;
        const auto omega = quantum::DensityMatrix::from_pure(quantum::bell_phi_plus(), 2, 2);
        quantum::RoofConfig cfg;
        cfg.seed = seed;
        const auto res = quantum::roof_optimize(
            omega, [](const quantum::DensityMatrix& r) { return quantum::f_alpha(r, 2.0); },
            cfg);
        o.outputs = {{"upper_bound", res.upper_bound}, {"pure_shortcut", res.pure_shortcut}};
        o.tolerances = {{"tol", p.at("tol")}};
        o.pass = std::abs(res.upper_bound - p.at("expected").get<double>()) <=
                     p.at("tol").get<double>() &&
                 res.pure_shortcut;
        return o;
      }));

  reg.push_back(make(
      "separable-mixture-f2",
      "the classically correlated mixture of |00> and |11> has roof value 0",
      {{"bound", 1e-8}, {"restarts", 8}},
      [](const json& p, std::uint64_t seed) {
        Outcome o;
        o.inputs = p;
        quantum::CMatrix m = quantum::CMatrix::Zero(4, 4);
        m(0, 0) = 0.5;
        m(3, 3) = 0.5;
        const quantum::DensityMatrix omega(m, 2, 2);
        quantum::RoofConfig cfg;
        cfg.seed = seed;
        cfg.restarts = p.at("restarts");
        const auto res = quantum::roof_optimize(
            omega, [](const quantum::DensityMatrix& r) { return quantum::f_alpha(r, 2.0); },
            cfg);
        o.outputs = {{"upper_bound", res.upper_bound}};
        o.tolerances = {{"bound", p.at("bound")}};
        o.pass = res.upper_bound <= p.at("bound").get<double>();
        return o;
      }));

  reg.push_back(make(
      "bell-mixture-tangle",
      "the 3/4 - 1/4 Bell mixture has roof value 1/4 under f_2 within one part in a "
      "thousand",
      {{"expected", 0.25}, {"tol", 1e-3}, {"m", 4}, {"restarts", 64}},
      [](const json& p, std::uint64_t seed) {
        Outcome o;
        o.inputs = p;
        const auto plus = quantum::bell_phi_plus();
        const auto minus = quantum::bell_phi_minus();
        quantum::CMatrix m =
            0.75 * (plus * plus.adjoint()) + 0.25 * (minus * minus.adjoint());
        const quantum::DensityMatrix omega(m, 2, 2);
        quantum::RoofConfig cfg;
        cfg.seed = seed;
        cfg.m = p.at("m").get<Index>();
        cfg.restarts = p.at("restarts");
        const auto res = quantum::roof_optimize(
            omega, [](const quantum::DensityMatrix& r) { return quantum::f_alpha(r, 2.0); },
            cfg);
        o.outputs = {{"upper_bound", res.upper_bound},
                     {"components", res.decomposition.size()}};
        o.tolerances = {{"tol", p.at("tol")}};
        o.pass = res.upper_bound <= p.at("expected").get<double>() + p.at("tol").get<double>() &&
                 res.upper_bound >= p.at("expected").get<double>() - 1e-6;
        return o;
      }));

  return reg;
}

}  // namespace

const std::vector<Scenario>& registry() {
  static const std::vector<Scenario> reg = build_registry();
  return reg;
}

const Scenario* find(const std::string& name) {
  for (const auto& s : registry())
    if (s.name == name) return &s;
  return nullptr;
}

Outcome run_scenario(const std::string& name, const json& overrides, std::uint64_t root_seed) {
  const Scenario* s = find(name);
  if (!s) throw std::invalid_argument("unknown scenario '" + name + "'");
  const json params = merged(s->defaults, overrides);
  Outcome o = s->run(params, derive_seed(root_seed, name_hash(name)));
  o.name = name;
  return o;
}

json list_json(const std::string& filter) {
  json out = json::array();
  for (const auto& s : registry()) {
    if (!filter.empty() && s.name.find(filter) == std::string::npos) continue;
    out.push_back({{"name", s.name}, {"summary", s.summary}, {"defaults", s.defaults}});
  }
  return out;
}

}  // namespace mukit::scenarios
