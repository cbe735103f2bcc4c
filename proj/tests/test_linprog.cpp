#include <doctest.h>

#include "mukit/linprog.hpp"

using namespace mukit;

TEST_CASE("simple inequality LP") {
  lp::Problem p;
  p.c = Vector(2);
  p.c << -1, -1;
  p.ub_lhs = Matrix(1, 2);
  p.ub_lhs << 1, 1;
  p.ub_rhs = Vector(1);
  p.ub_rhs << 1;
  const auto s = lp::solve(p);
  REQUIRE(s.optimal());
  CHECK(s.objective == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(s.x.sum() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("equality LP picks the cheap corner") {
  lp::Problem p;
  p.c = Vector(2);
  p.c << 1, 2;
  p.eq_lhs = Matrix(1, 2);
  p.eq_lhs << 1, 1;
  p.eq_rhs = Vector(1);
  p.eq_rhs << 1;
  const auto s = lp::solve(p);
  REQUIRE(s.optimal());
  CHECK(s.x[0] == doctest::Approx(1.0));
  CHECK(s.x[1] == doctest::Approx(0.0));
  CHECK(s.objective == doctest::Approx(1.0));
}

TEST_CASE("infeasible detection") {
  lp::Problem p;
  p.c = Vector::Ones(1);
  p.ub_lhs = Matrix(1, 1);
  p.ub_lhs << 1;
  p.ub_rhs = Vector(1);
  p.ub_rhs << -1;  // x <= -1 with x >= 0
  CHECK(lp::solve(p).status == lp::Status::Infeasible);
}

TEST_CASE("unbounded detection") {
  lp::Problem p;
  p.c = Vector(1);
  p.c << -1;
  p.ub_lhs = Matrix(1, 1);
  p.ub_lhs << -1;  // -x <= 1, x free to grow
  p.ub_rhs = Vector(1);
  p.ub_rhs << 1;
  CHECK(lp::solve(p).status == lp::Status::Unbounded);

  lp::Problem q;  // no constraints at all
  q.c = Vector(1);
  q.c << -1;
  CHECK(lp::solve(q).status == lp::Status::Unbounded);
}

TEST_CASE("free variables") {
  lp::Problem p;
  p.c = Vector(1);
  p.c << 1;
  p.eq_lhs = Matrix(1, 1);
  p.eq_lhs << 1;
  p.eq_rhs = Vector(1);
  p.eq_rhs << -3;
  p.free_vars = {true};
  const auto s = lp::solve(p);
  REQUIRE(s.optimal());
  CHECK(s.x[0] == doctest::Approx(-3.0));
}

TEST_CASE("redundant equalities stay feasible") {
  lp::Problem p;
  p.c = Vector(2);
  p.c << 1, 1;
  p.eq_lhs = Matrix(2, 2);
  p.eq_lhs << 1, 1, 2, 2;  // second row is twice the first
  p.eq_rhs = Vector(2);
  p.eq_rhs << 1, 2;
  const auto s = lp::solve(p);
  REQUIRE(s.optimal());
  CHECK((p.eq_lhs * s.x - p.eq_rhs).cwiseAbs().maxCoeff() <= 1e-9);
  CHECK(s.objective == doctest::Approx(1.0));
}

TEST_CASE("random transport-like LPs satisfy constraints and beat sampled feasible points") {
  auto rng = make_rng(99);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    const Index n = 6 + t % 5, m = 3;
    lp::Problem p;
    p.c.resize(n);
    for (Index j = 0; j < n; ++j) p.c[j] = gauss(rng);
    p.eq_lhs.resize(m, n);
    Vector mix = Vector::Zero(n);
    for (Index j = 0; j < n; ++j) mix[j] = unif(rng) + 1e-3;
    mix /= mix.sum();
    for (Index i = 0; i < m - 1; ++i)
      for (Index j = 0; j < n; ++j) p.eq_lhs(i, j) = gauss(rng);
    p.eq_lhs.row(m - 1).setOnes();
    p.eq_rhs = p.eq_lhs * mix;  // feasible by construction

    const auto s = lp::solve(p);
    REQUIRE(s.optimal());
    CHECK((p.eq_lhs * s.x - p.eq_rhs).cwiseAbs().maxCoeff() <= 1e-8);
    CHECK(s.x.minCoeff() >= -1e-9);
    CHECK(s.objective <= p.c.dot(mix) + 1e-9);
  }
}
