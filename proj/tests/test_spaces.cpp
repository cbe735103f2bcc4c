#include <doctest.h>

#include "mukit/json_io.hpp"
#include "mukit/spaces.hpp"

using namespace mukit;
using spaces::SetDescriptor;
using spaces::SetFamily;

namespace {
Vector vec(std::initializer_list<double> v) {
  Vector x(static_cast<Index>(v.size()));
  Index i = 0;
  for (double e : v) x[i++] = e;
  return x;
}
}  // namespace

TEST_CASE("lp_norm basics") {
  CHECK(spaces::lp_norm(vec({3, 4}), 2.0) == doctest::Approx(5.0).epsilon(1e-14));
  for (double p : {1.0, 1.7, 2.0, 5.0, spaces::kInfExponent})
    CHECK(spaces::lp_norm(spaces::canonical_basis(1, 6), p) == doctest::Approx(1.0));
  const Index n = 7;
  CHECK(spaces::lp_norm(Vector::Constant(n, 1.0 / n), 2.0) ==
        doctest::Approx(1.0 / std::sqrt(double(n))).epsilon(1e-14));
  CHECK(spaces::lp_norm(vec({-2, 1, 3}), spaces::kInfExponent) == 3.0);
  CHECK_THROWS_AS(spaces::lp_norm(vec({1, 2}), 0.5), std::domain_error);
}

TEST_CASE("lp_norm is homogeneous and subadditive on random samples") {
  auto rng = make_rng(7);
  std::normal_distribution<double> gauss;
  for (int t = 0; t < 300; ++t) {
    const Index dim = 2 + t % 14;
    Vector x(dim), y(dim);
    for (Index i = 0; i < dim; ++i) {
      x[i] = gauss(rng);
      y[i] = gauss(rng);
    }
    for (double p : {1.0, 1.5, 2.0, 3.0, spaces::kInfExponent}) {
      const double tri =
          spaces::lp_norm((x + y).eval(), p) - spaces::lp_norm(x, p) - spaces::lp_norm(y, p);
      CHECK(tri <= 1e-12);
      CHECK(std::abs(spaces::lp_norm((-1.75 * x).eval(), p) - 1.75 * spaces::lp_norm(x, p)) <=
            1e-12);
    }
  }
}

TEST_CASE("membership oracles") {
  const auto d2 = SetDescriptor::simplex_delta_p(2.0, 2);
  CHECK(spaces::contains(d2, vec({0.5, 0.5})));
  const auto a2 = SetDescriptor::lp_cone(2.0, 2);
  CHECK_FALSE(spaces::contains(a2, vec({1.0, 1.0})));
  const auto cube = SetDescriptor::hilbert_cube(vec({1.0, 1.0}));
  CHECK(spaces::contains(cube, vec({1.0, -1.0})));
  CHECK_THROWS_AS(spaces::contains(d2, vec({1, 2, 3})), std::invalid_argument);

  SUBCASE("zero belongs to every family with nonnegative parameters") {
    for (const auto& desc :
         {SetDescriptor::l1_cone(4), SetDescriptor::lp_cone(2.0, 4),
          SetDescriptor::simplex_delta_p(3.0, 4), SetDescriptor::hilbert_cube(Vector::Ones(4)),
          SetDescriptor::unit_ball(4), SetDescriptor::standard_simplex(4)}) {
      CHECK(spaces::contains(desc, Vector::Zero(4)));
    }
  }

  SUBCASE("cone and simplex families are star-shaped about zero") {
    auto rng = make_rng(11);
    for (const auto& desc : {SetDescriptor::l1_cone(5), SetDescriptor::lp_cone(1.5, 5),
                             SetDescriptor::simplex_delta_p(2.0, 5),
                             SetDescriptor::standard_simplex(5)}) {
      for (int t = 0; t < 100; ++t) {
        const Vector x = spaces::sample_point(desc, rng);
        REQUIRE(spaces::contains(desc, x));
        for (double s : {0.0, 0.25, 0.5, 0.99}) CHECK(spaces::contains(desc, (s * x).eval()));
      }
    }
  }
}

TEST_CASE("canonical basis") {
  CHECK(spaces::canonical_basis(1, 3) == vec({1, 0, 0}));
  CHECK(spaces::canonical_basis(3, 3) == vec({0, 0, 1}));
  CHECK(spaces::canonical_basis(2, 2) == vec({0, 1}));
  CHECK_THROWS_AS(spaces::canonical_basis(0, 3), std::out_of_range);
  CHECK_THROWS_AS(spaces::canonical_basis(4, 3), std::out_of_range);
}

TEST_CASE("descriptor validation") {
  CHECK_THROWS_AS(SetDescriptor::lp_cone(1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(SetDescriptor::simplex_delta_p(0.9, 4), std::invalid_argument);
  CHECK_THROWS_AS(SetDescriptor::hilbert_cube(vec({1.0, 0.0})), std::invalid_argument);
}

TEST_CASE("descriptor JSON round trip") {
  const std::vector<SetDescriptor> cases = {
      SetDescriptor::l1_cone(3),       SetDescriptor::lp_cone(2.5, 7),
      SetDescriptor::simplex_delta_p(2.0, 5), SetDescriptor::hilbert_cube(vec({1, 0.5, 0.25})),
      SetDescriptor::unit_ball(9),     SetDescriptor::standard_simplex(2)};
  for (const auto& d : cases) {
    const auto j = io::to_json(d);
    const auto back = io::set_from_json(j);
    CHECK(back.family == d.family);
    CHECK(back.dim == d.dim);
    if (d.family == SetFamily::LpConeBounded || d.family == SetFamily::SimplexDeltaP)
      CHECK(back.p == d.p);
    if (d.family == SetFamily::HilbertCube) CHECK((back.a - d.a).norm() == 0.0);
  }
  CHECK_THROWS(io::set_from_json(nlohmann::json{{"family", "Pentagon"}, {"dim", 2}}));
}

TEST_CASE("projection lands inside every family") {
  auto rng = make_rng(23);
  std::normal_distribution<double> gauss;
  for (const auto& desc :
       {SetDescriptor::l1_cone(6), SetDescriptor::lp_cone(3.0, 6),
        SetDescriptor::simplex_delta_p(2.0, 6), SetDescriptor::hilbert_cube(Vector::Ones(6)),
        SetDescriptor::unit_ball(6), SetDescriptor::standard_simplex(6)}) {
    for (int t = 0; t < 200; ++t) {
      Vector raw(6);
      for (Index i = 0; i < 6; ++i) raw[i] = 3.0 * gauss(rng);
      CHECK(spaces::contains(desc, spaces::project_into(desc, raw)));
    }
  }
}

TEST_CASE("extreme point samples are extreme-consistent") {
  auto rng = make_rng(31);
  const auto a2 = SetDescriptor::lp_cone(2.0, 5);
  for (int t = 0; t < 200; ++t) {
    const Vector e = spaces::sample_extreme_point(a2, rng);
    const double n = spaces::lp_norm(e, 2.0);
    CHECK((n == doctest::Approx(0.0).epsilon(1e-12) || n == doctest::Approx(1.0).epsilon(1e-12)));
  }
  const auto ball = SetDescriptor::unit_ball(5);
  for (int t = 0; t < 100; ++t)
    CHECK(spaces::sample_extreme_point(ball, rng).norm() == doctest::Approx(1.0).epsilon(1e-12));
}
