#include <benchmark/benchmark.h>

#include "mukit/stability.hpp"

using namespace mukit;

static void BM_DeltaPSplit(benchmark::State& state) {
  const Index dim = state.range(0);
  auto rng = make_rng(7, static_cast<std::uint64_t>(dim));
  std::exponential_distribution<double> expo(1.0);
  std::normal_distribution<double> gauss;
  Vector a(dim), b(dim);
  for (Index i = 0; i < dim; ++i) {
    a[i] = expo(rng) + 1e-3;
    b[i] = expo(rng) + 1e-3;
  }
  a *= 0.85 / a.sum();
  b *= 0.80 / b.sum();
  const double eps = 0.05;
  Vector noise(dim);
  for (Index i = 0; i < dim; ++i) noise[i] = gauss(rng);
  noise *= (eps / 10.0) / noise.norm();
  const Vector z = spaces::project_into(spaces::SetDescriptor::standard_simplex(dim),
                                        (0.5 * (a + b) + noise).eval());

  for (auto _ : state) {
    auto s = stability::delta_p_split(2.0, a, b, z, eps);
    benchmark::DoNotOptimize(s.achieved_eps);
  }
}
BENCHMARK(BM_DeltaPSplit)->Arg(16)->Arg(64)->Arg(128);

static void BM_BallAdversary(benchmark::State& state) {
  const Index dim = state.range(0);
  Vector z = Vector::Zero(dim);
  z[0] = 0.9;
  for (auto _ : state) {
    auto res = stability::ball_bound_adversary(z, 0.5, 10, 42);
    benchmark::DoNotOptimize(res.max_outside_mass);
  }
}
BENCHMARK(BM_BallAdversary)->Arg(3)->Arg(8);
