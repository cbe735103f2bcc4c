#include <doctest.h>

#include "mukit/json_io.hpp"
#include "mukit/measure.hpp"
#include "mukit/spaces.hpp"

using namespace mukit;
using measures::ChoquetVerdict;
using measures::FiniteMeasure;

namespace {
Vector vec(std::initializer_list<double> v) {
  Vector x(static_cast<Index>(v.size()));
  Index i = 0;
  for (double e : v) x[i++] = e;
  return x;
}
}  // namespace

TEST_CASE("barycenter") {
  FiniteMeasure mu({spaces::canonical_basis(1, 2), spaces::canonical_basis(2, 2)},
                   Vector::Constant(2, 0.5));
  CHECK((measures::barycenter(mu) - vec({0.5, 0.5})).norm() == 0.0);

  const Vector x = vec({0.2, 0.3, 0.1});
  CHECK((measures::barycenter(FiniteMeasure::dirac(x)) - x).norm() == 0.0);

  const Index n = 6;
  std::vector<Vector> basis;
  for (Index i = 1; i <= n; ++i) basis.push_back(spaces::canonical_basis(i, n));
  const Vector b = measures::barycenter(FiniteMeasure::uniform(basis));
  CHECK((b - Vector::Constant(n, 1.0 / n)).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("mix arithmetic") {
  const Vector x = vec({1, 0}), y = vec({0, 1});
  const auto half = measures::mix(FiniteMeasure::dirac(x), FiniteMeasure::dirac(y), 0.5);
  CHECK(half.weights == Vector::Constant(2, 0.5));

  const auto mu = FiniteMeasure::uniform({x, y});
  const auto nu = FiniteMeasure::uniform({vec({0.5, 0.5}), vec({0.25, 0.25})});
  const auto m = measures::mix(mu, nu, 0.25);
  CHECK(m.weights == vec({0.125, 0.125, 0.375, 0.375}));

  SUBCASE("lambda = 1 keeps mu after pruning") {
    const auto all_mu = measures::mix(mu, nu, 1.0).deduplicated(1e-10, 0.0);
    CHECK(all_mu.size() == mu.size());
    CHECK((measures::barycenter(all_mu) - measures::barycenter(mu)).norm() <= 1e-15);
  }

  SUBCASE("mixing is affine in the barycenter") {
    auto rng = make_rng(5);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const auto desc = spaces::SetDescriptor::unit_ball(4);
    for (int t = 0; t < 200; ++t) {
      std::vector<Vector> atoms_a, atoms_b;
      for (int k = 0; k < 3; ++k) {
        atoms_a.push_back(spaces::sample_point(desc, rng));
        atoms_b.push_back(spaces::sample_point(desc, rng));
      }
      const auto a = FiniteMeasure::uniform(atoms_a);
      const auto b = FiniteMeasure::uniform(atoms_b);
      const double lam = unif(rng);
      const Vector lhs = measures::barycenter(measures::mix(a, b, lam));
      const Vector rhs =
          lam * measures::barycenter(a) + (1.0 - lam) * measures::barycenter(b);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }

  CHECK_THROWS_AS(measures::mix(mu, nu, 1.5), std::invalid_argument);
}

TEST_CASE("choquet comparison") {
  measures::ConvexTestFamily fam;
  fam.functions.push_back([](const Vector& t) { return t[0] * t[0]; });
  fam.labels.push_back("t^2");

  FiniteMeasure mu({vec({0.0}), vec({1.0})}, Vector::Constant(2, 0.5));
  const auto nu = FiniteMeasure::dirac(vec({0.5}));
  CHECK(measures::choquet_compare(mu, nu, fam) == ChoquetVerdict::DominatesOnFamily);
  CHECK(measures::choquet_compare(nu, mu, fam) == ChoquetVerdict::DominatedOnFamily);
  CHECK(measures::choquet_compare(mu, mu, fam) == ChoquetVerdict::EqualOnFamily);

  const auto d1 = FiniteMeasure::dirac(spaces::canonical_basis(1, 2));
  const auto d2 = FiniteMeasure::dirac(spaces::canonical_basis(2, 2));
  measures::ConvexTestFamily fam2;
  fam2.functions.push_back([](const Vector& t) { return t[0]; });
  CHECK(measures::choquet_compare(d1, d2, fam2) == ChoquetVerdict::IncomparableOnFamily);

  SUBCASE("mutual domination collapses to equality") {
    // same barycenter, same integrals for the affine family
    measures::ConvexTestFamily affine;
    affine.functions.push_back([](const Vector& t) { return 2.0 * t[0] + 1.0; });
    FiniteMeasure spread({vec({0.25}), vec({0.75})}, Vector::Constant(2, 0.5));
    CHECK(measures::choquet_compare(spread, FiniteMeasure::dirac(vec({0.5})), affine) ==
          ChoquetVerdict::EqualOnFamily);
  }
}

TEST_CASE("mass outside") {
  FiniteMeasure mu({vec({0.0}), vec({2.0})}, vec({0.3, 0.7}));
  const auto inside = [](const Vector& y) { return y[0] < 1.0; };
  CHECK(measures::mass_outside(mu, inside) == doctest::Approx(0.7));
  CHECK(measures::mass_outside(mu, [](const Vector&) { return true; }) == 0.0);
  CHECK(measures::mass_outside(FiniteMeasure::dirac(vec({2.0})), inside) == 1.0);
}

TEST_CASE("validation rejects malformed measures") {
  CHECK_THROWS_AS(FiniteMeasure({vec({1.0})}, vec({0.5})), std::invalid_argument);
  CHECK_THROWS_AS(FiniteMeasure({vec({1.0}), vec({2.0})}, vec({1.5, -0.5})),
                  std::invalid_argument);
  CHECK_THROWS_AS(FiniteMeasure({vec({1.0}), vec({1.0, 2.0})}, vec({0.5, 0.5})),
                  std::invalid_argument);
  CHECK_THROWS_AS(measures::barycenter(FiniteMeasure{}), std::invalid_argument);
}

TEST_CASE("deduplication merges near atoms") {
  FiniteMeasure mu({vec({1.0, 0.0}), vec({1.0 + 1e-12, 0.0}), vec({0.0, 1.0})},
                   vec({0.25, 0.25, 0.5}));
  const auto d = mu.deduplicated();
  CHECK(d.size() == 2);
  CHECK(d.weights[0] == doctest::Approx(0.5));
  CHECK((measures::barycenter(d) - measures::barycenter(mu)).norm() <= 1e-11);
}

TEST_CASE("measure JSON round trip") {
  FiniteMeasure mu({vec({0.125, 0.5}), vec({0.25, 0.0})}, vec({0.375, 0.625}));
  const auto j = io::to_json(mu);
  const auto back = io::measure_from_json(j);
  CHECK(back.weights == mu.weights);
  for (std::size_t i = 0; i < mu.atoms.size(); ++i) CHECK(back.atoms[i] == mu.atoms[i]);

  // 17-digit dump round-trips doubles exactly
  const auto text = io::dump(j);
  const auto reparsed = io::measure_from_json(nlohmann::json::parse(text));
  CHECK(reparsed.weights == mu.weights);
}
