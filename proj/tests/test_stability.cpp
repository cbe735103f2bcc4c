#include <doctest.h>

#include "mukit/stability.hpp"
#include "support/oracles.hpp"

using namespace mukit;
using spaces::SetDescriptor;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector x(static_cast<Index>(v.size()));
  Index i = 0;
  for (double e : v) x[i++] = e;
  return x;
}

bool exact_midpoint(const stability::SplitResult& s, const Vector& z) {
  for (Index k = 0; k < z.size(); ++k)
    if ((s.x[k] + s.y[k]) / 2.0 != z[k]) return false;
  return true;
}

}  // namespace

TEST_CASE("split returns the segment itself at the exact midpoint") {
  auto rng = make_rng(1);
  const Index n = 16;
  const Vector a = testing::random_simplex_point(n, 0.7, rng);
  const Vector b = testing::random_simplex_point(n, 0.8, rng);
  Vector z(n);
  for (Index k = 0; k < n; ++k) z[k] = (a[k] + b[k]) / 2.0;
  const auto s = stability::delta_p_split(2.0, a, b, z, 0.05);
  CHECK(s.achieved_eps == 0.0);
  CHECK((s.x - a).norm() == 0.0);
  CHECK((s.y - b).norm() == 0.0);
  CHECK(exact_midpoint(s, z));
}

TEST_CASE("split handles the degenerate segment") {
  const Index n = 8;
  const Vector a = Vector::Constant(n, 0.05);
  const auto s = stability::delta_p_split(2.0, a, a, a, 0.01);
  CHECK(s.achieved_eps == 0.0);
  CHECK(exact_midpoint(s, a));
}

TEST_CASE("seeded split batch keeps every postcondition") {
  const Index n = 64;
  const double eps = 0.05;
  const auto simplex = SetDescriptor::standard_simplex(n);
  int head_lp_used = 0;
  for (int t = 0; t < 50; ++t) {
    auto rng = make_rng(500, t);
    const Vector a = testing::random_simplex_point(n, 0.85, rng);
    const Vector b = testing::random_simplex_point(n, 0.8, rng);
    Vector noise(n);
    std::normal_distribution<double> gauss;
    for (Index i = 0; i < n; ++i) noise[i] = gauss(rng);
    noise *= (eps / 10.0) / spaces::lp_norm(noise, 2.0);
    Vector z = spaces::project_into(simplex, (0.5 * (a + b) + noise).eval());

    const auto s = stability::delta_p_split(2.0, a, b, z, eps);
    CHECK(exact_midpoint(s, z));
    CHECK(spaces::contains(simplex, s.x));
    CHECK(spaces::contains(simplex, s.y));
    CHECK(s.achieved_eps < eps);
    if (s.head_dim < n) ++head_lp_used;
  }
  (void)head_lp_used;
}

TEST_CASE("split exercises the tail scaling when heads are short") {
  // supports concentrated on the first coordinates force a short head, so the
  // tail of z is carried by the (1 +/- tau) scaling
  const Index n = 32;
  const double eps = 0.2;
  Vector a = Vector::Zero(n), b = Vector::Zero(n);
  a[0] = 0.5;
  a[1] = 0.2;
  b[0] = 0.3;
  b[2] = 0.35;
  Vector z = 0.5 * (a + b);
  for (Index k = 8; k < n; ++k) z[k] = 1e-4;  // tail mass below eps/6
  const auto simplex = SetDescriptor::standard_simplex(n);
  REQUIRE(spaces::contains(simplex, z));
  const auto s = stability::delta_p_split(2.0, a, b, z, eps);
  CHECK(exact_midpoint(s, z));
  CHECK(s.head_dim < n);
  CHECK(spaces::contains(simplex, s.x));
  CHECK(spaces::contains(simplex, s.y));
  CHECK(s.achieved_eps < eps);
}

TEST_CASE("split rejects far-off centers") {
  const Index n = 8;
  const Vector a = Vector::Constant(n, 0.05);
  const Vector b = Vector::Constant(n, 0.1);
  Vector z = Vector::Constant(n, 0.12);
  CHECK_THROWS_AS(stability::delta_p_split(2.0, a, b, z, 0.01), std::invalid_argument);
}

TEST_CASE("openness probe succeeds on simplex and ball backends") {
  auto rng = make_rng(9);
  SUBCASE("l2 simplex") {
    const Index n = 24;
    const auto desc = SetDescriptor::simplex_delta_p(2.0, n);
    const Vector a = testing::random_simplex_point(n, 0.7, rng);
    const Vector b = testing::random_simplex_point(n, 0.75, rng);
    const Vector c = 0.5 * (a + b);
    std::vector<Vector> zs;
    std::vector<double> eps;
    for (int k = 0; k < 8; ++k) {
      Vector noise(n);
      std::normal_distribution<double> gauss;
      for (Index i = 0; i < n; ++i) noise[i] = gauss(rng);
      const double budget = 0.2 * std::pow(0.5, k);
      noise *= (budget / 8.0) / spaces::lp_norm(noise, 2.0);
      zs.push_back(spaces::project_into(SetDescriptor::standard_simplex(n), (c + noise).eval()));
      eps.push_back(budget);
    }
    const auto rep = stability::midpoint_openness_probe(desc, a, b, zs, eps);
    CHECK(rep.all_success);
    for (std::size_t k = 1; k < rep.entries.size(); ++k)
      CHECK(rep.entries[k].achieved_eps <= rep.entries[k - 1].eps);
  }
  SUBCASE("constant center sequence achieves zero") {
    const Index n = 8;
    const Vector a = Vector::Constant(n, 0.06);
    const Vector b = Vector::Constant(n, 0.04);
    Vector c(n);
    for (Index k = 0; k < n; ++k) c[k] = (a[k] + b[k]) / 2.0;
    const auto rep = stability::midpoint_openness_probe(
        SetDescriptor::standard_simplex(n), a, b, {c, c}, {0.01, 0.005});
    CHECK(rep.all_success);
    for (const auto& e : rep.entries) CHECK(e.achieved_eps == 0.0);
  }
  SUBCASE("unit ball scaling probe") {
    const Index n = 6;
    const auto ball = SetDescriptor::unit_ball(n);
    const Vector a = 0.6 * spaces::sample_extreme_point(ball, rng);
    const Vector b = 0.4 * spaces::sample_extreme_point(ball, rng);
    const Vector c = 0.5 * (a + b);
    std::vector<Vector> zs;
    std::vector<double> eps;
    Vector dir(n);
    std::normal_distribution<double> gauss;
    for (Index i = 0; i < n; ++i) dir[i] = gauss(rng);
    dir /= dir.norm();
    for (int k = 0; k < 6; ++k) {
      zs.push_back(c + 0.01 * std::pow(0.5, k) * dir);
      eps.push_back(std::max(1e-5, 0.4 * 0.01 * std::pow(0.5, k) * 40));
    }
    const auto rep = stability::midpoint_openness_probe(ball, a, b, zs, eps);
    CHECK(rep.all_success);
  }
}

TEST_CASE("ball bound closed form") {
  CHECK(stability::ball_bound(1.0, 0.5) == doctest::Approx(1.0));
  CHECK(stability::ball_bound(std::sqrt(1.0 - 0.25), 0.5) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(stability::ball_bound(0.9, 0.5) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK_THROWS_AS(stability::ball_bound(0.4, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(stability::ball_bound(1.1, 0.5), std::invalid_argument);
}

TEST_CASE("two-point adversary is tight") {
  for (const double zn : {0.82, 0.9, 0.97}) {
    for (const double delta : {0.3, 0.5}) {
      if (zn <= 1.0 - delta) continue;
      Vector z = Vector::Zero(4);
      z[0] = zn;
      const auto mu = stability::two_point_adversary(z, delta);
      CHECK((measures::barycenter(mu) - z).norm() <= 1e-9);
      for (const auto& atom : mu.atoms) CHECK(atom.norm() <= 1.0 + 1e-12);
      const double outside = measures::mass_outside(
          mu, [&](const Vector& y) { return (y - z).norm() <= delta - 1e-9; });
      // the bound saturates at 1 once r(delta, z) turns negative (vacuous)
      const double expected = std::min(1.0, 1.0 - stability::ball_bound(zn, delta));
      CHECK(outside == doctest::Approx(expected).epsilon(1e-9));
    }
  }
}

TEST_CASE("LP adversary stays below the bound") {
  for (Index dim : {2, 3, 4}) {
    Vector z = Vector::Zero(dim);
    z[0] = 0.9;
    const auto res = stability::ball_bound_adversary(z, 0.5, 60, 42);
    CHECK(res.trials_skipped == 0);
    CHECK(res.max_outside_mass <= res.bound + 1e-7);
    CHECK(res.max_outside_mass >= res.bound - 1e-6);  // the tight config is in the pool
  }
}

TEST_CASE("hull continuity bound holds near the sphere") {
  const Index n = 4;
  Vector x = Vector::Zero(n);
  x[0] = 1.0;

  SUBCASE("norm-type objective") {
    const auto f = hull::one_minus_norm(2.0);
    std::vector<Vector> zs;
    for (int k = 1; k <= 20; ++k) zs.push_back((1.0 - std::pow(2.0, -k)) * x);
    stability::ContinuityConfig cfg;
    cfg.modulus = [](double t) { return t; };  // 1-Lipschitz
    cfg.search.restarts = 4;
    const auto entries = stability::ball_hull_continuity(f, x, zs, cfg);
    for (const auto& e : entries) CHECK(e.within);
    // the bound itself contracts toward zero along the sequence
    CHECK(entries.back().bound < 0.1);
    CHECK(entries.back().bound < entries.front().bound / 4.0);
  }

  SUBCASE("affine objective has no gap") {
    hull::ObjectiveFunction aff;
    Vector slope(n);
    slope << 0.2, -0.1, 0.05, 0.0;
    aff.evaluator = [slope](const Vector& y) { return slope.dot(y) + 0.4; };
    aff.declared_concave = true;
    aff.declared_convex = true;
    aff.lower_bound = -1.0;
    aff.upper_bound = 1.0;
    std::vector<Vector> zs;
    for (int k = 1; k <= 8; ++k) zs.push_back((1.0 - std::pow(2.0, -k)) * x);
    stability::ContinuityConfig cfg;
    cfg.modulus = [&](double t) { return slope.norm() * t; };
    cfg.search.restarts = 4;
    for (const auto& e : stability::ball_hull_continuity(aff, x, zs, cfg)) {
      CHECK(e.solver_gap <= cfg.modulus((x - x).norm() + 2 * e.delta) + 1e-9);
      CHECK(e.within);
    }
  }
}

TEST_CASE("extreme point separator") {
  const auto s1 = stability::extreme_point_separator(
      vec({0.5, 0.5}), spaces::canonical_basis(1, 2), spaces::canonical_basis(2, 2));
  CHECK(s1.a_x1 == doctest::Approx(1.0));
  CHECK(s1.a_x2 == doctest::Approx(-1.0));
  CHECK(s1.gap == doctest::Approx(1.0));

  const auto s2 = stability::extreme_point_separator(vec({1, 0, 0}), vec({2, 0, 0}),
                                                     vec({0, 0, 0}));
  CHECK(s2.gap == doctest::Approx(4.0));

  SUBCASE("closed form on random pairs") {
    auto rng = make_rng(90);
    std::normal_distribution<double> gauss;
    for (int t = 0; t < 1000; ++t) {
      Vector x1(5), x2(5);
      for (Index i = 0; i < 5; ++i) {
        x1[i] = gauss(rng);
        x2[i] = gauss(rng);
      }
      if ((x1 - x2).norm() < 1e-6) continue;
      const Vector x0 = 0.5 * (x1 + x2);
      const auto s = stability::extreme_point_separator(x0, x1, x2);
      const double closed = std::pow((x1 - x2).norm(), 4) / 4.0;
      CHECK(std::abs(s.gap - closed) <= 1e-10 * std::max(1.0, closed));
      CHECK(s.gap > 0.0);
      // the witness gap equals the midpoint defect of f = -a^2
      const double direct = s.f(x0) - 0.5 * (s.f(x1) + s.f(x2));
      CHECK(std::abs(direct - s.gap) <= 1e-10 * std::max(1.0, closed));
    }
  }

  CHECK_THROWS_AS(
      stability::extreme_point_separator(vec({0, 0}), vec({1, 1}), vec({1, 1})),
      std::invalid_argument);
  CHECK_THROWS_AS(
      stability::extreme_point_separator(vec({0.9, 0}), vec({1, 0}), vec({0, 0})),
      std::invalid_argument);
}
