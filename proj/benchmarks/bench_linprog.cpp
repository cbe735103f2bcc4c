#include <benchmark/benchmark.h>

#include "mukit/linprog.hpp"

using namespace mukit;

static lp::Problem weight_problem(Index dim, Index atoms, std::uint64_t seed) {
  auto rng = make_rng(seed);
  std::normal_distribution<double> gauss;
  std::exponential_distribution<double> expo(1.0);

  Matrix pts(dim, atoms);
  for (Index j = 0; j < atoms; ++j)
    for (Index i = 0; i < dim; ++i) pts(i, j) = std::abs(gauss(rng));
  Vector mixw(atoms);
  for (Index j = 0; j < atoms; ++j) mixw[j] = expo(rng) + 1e-3;
  mixw /= mixw.sum();

  lp::Problem p;
  p.c.resize(atoms);
  for (Index j = 0; j < atoms; ++j) p.c[j] = gauss(rng);
  p.eq_lhs.resize(dim + 1, atoms);
  p.eq_lhs.topRows(dim) = pts;
  p.eq_lhs.row(dim).setOnes();
  p.eq_rhs.resize(dim + 1);
  p.eq_rhs.head(dim) = pts * mixw;
  p.eq_rhs[dim] = 1.0;
  return p;
}

static void BM_WeightLp(benchmark::State& state) {
  const auto prob = weight_problem(state.range(0), 4 * state.range(0), 1234);
  for (auto _ : state) {
    auto sol = lp::solve(prob);
    benchmark::DoNotOptimize(sol.objective);
  }
}
BENCHMARK(BM_WeightLp)->Arg(4)->Arg(8)->Arg(16)->Arg(32);
