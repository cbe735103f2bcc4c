#include <benchmark/benchmark.h>

#include "mukit/quantum.hpp"

using namespace mukit;

static void BM_RoofBellMixture(benchmark::State& state) {
  const auto plus = quantum::bell_phi_plus();
  const auto minus = quantum::bell_phi_minus();
  quantum::CMatrix m = 0.75 * (plus * plus.adjoint()) + 0.25 * (minus * minus.adjoint());
  const quantum::DensityMatrix omega(m, 2, 2);
  quantum::RoofConfig cfg;
  cfg.m = 4;
  cfg.restarts = static_cast<int>(state.range(0));
  const auto f2 = [](const quantum::DensityMatrix& r) { return quantum::f_alpha(r, 2.0); };

  for (auto _ : state) {
    auto res = quantum::roof_optimize(omega, f2, cfg);
    benchmark::DoNotOptimize(res.upper_bound);
  }
}
BENCHMARK(BM_RoofBellMixture)->Arg(4)->Arg(16)->Arg(64);

static void BM_PartialTrace(benchmark::State& state) {
  const Index d = state.range(0);
  auto rng = make_rng(3);
  std::normal_distribution<double> gauss;
  quantum::CVector psi(d * d);
  for (Index i = 0; i < d * d; ++i) psi[i] = std::complex<double>(gauss(rng), gauss(rng));
  const auto omega = quantum::DensityMatrix::from_pure(psi, d, d);
  for (auto _ : state) {
    auto rho = quantum::partial_trace(omega);
    benchmark::DoNotOptimize(rho.entries(0, 0));
  }
}
BENCHMARK(BM_PartialTrace)->Arg(2)->Arg(4)->Arg(8);
