#include <benchmark/benchmark.h>

#include "mukit/hull.hpp"

using namespace mukit;

static void BM_CoFSearchSimplex(benchmark::State& state) {
  const Index dim = state.range(0);
  auto rng = make_rng(99, static_cast<std::uint64_t>(dim));
  std::normal_distribution<double> gauss;
  std::vector<Vector> slopes;
  std::vector<double> offsets;
  for (int j = 0; j < 4; ++j) {
    Vector s(dim);
    for (Index i = 0; i < dim; ++i) s[i] = gauss(rng);
    slopes.push_back(s);
    offsets.push_back(1.0);
  }
  hull::ObjectiveFunction f;
  f.declared_concave = true;
  f.evaluator = [slopes, offsets](const Vector& y) {
    double v = 1e18;
    for (std::size_t j = 0; j < slopes.size(); ++j)
      v = std::min(v, slopes[j].dot(y) + offsets[j]);
    return v;
  };
  const auto desc = spaces::SetDescriptor::standard_simplex(dim);
  const Vector x = Vector::Constant(dim, 0.8 / static_cast<double>(dim));
  hull::SearchConfig cfg;
  cfg.restarts = 4;

  for (auto _ : state) {
    auto sol = hull::co_f_search(desc, f, x, cfg);
    benchmark::DoNotOptimize(sol.value);
  }
}
BENCHMARK(BM_CoFSearchSimplex)->Arg(4)->Arg(8)->Arg(16);

static void BM_LscProbeCorner(benchmark::State& state) {
  const Index dim = 12;
  const auto desc = spaces::SetDescriptor::lp_cone(2.0, dim);
  const auto f = hull::one_minus_norm(2.0);
  std::vector<Vector> seq;
  for (Index k = 1; k <= dim; ++k) {
    Vector x = Vector::Zero(dim);
    for (Index i = 0; i < k; ++i) x[i] = 1.0 / static_cast<double>(k);
    seq.push_back(x);
  }
  hull::SearchConfig cfg;
  cfg.restarts = 4;
  for (auto _ : state) {
    auto res = hull::lsc_probe(desc, f, seq, Vector::Zero(dim), cfg);
    benchmark::DoNotOptimize(res.gap);
  }
}
BENCHMARK(BM_LscProbeCorner);
