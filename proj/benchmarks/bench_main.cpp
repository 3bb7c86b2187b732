#include <benchmark/benchmark.h>

#include "mpwave/burgers.hpp"
#include "mpwave/profiles.hpp"
#include "mpwave/selfsimilar.hpp"
#include "mpwave/solver.hpp"
#include "mpwave/verify.hpp"

using namespace mpwave;

static void BM_BurgersEval(benchmark::State& state) {
  const BurgersProfile prof(-1.0, 1.0);
  double t = 1.0, x = -20.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prof.eval(t, x));
    x += 0.01;
    if (x > 20.0) {
      x = -20.0;
      t += 0.5;
      if (t > 50.0) t = 1.0;
    }
  }
}
BENCHMARK(BM_BurgersEval);

static void BM_SelfSimilarSolve(benchmark::State& state) {
  GasParams g;
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_selfsimilar(g, 1.0, 1.1, 1.0));
}
BENCHMARK(BM_SelfSimilarSolve);

static void BM_CompositeField(benchmark::State& state) {
  GasParams g = default_gas();
  const CompositeWave w = build_composite(g, default_pattern(g));
  double x = -40.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(w.field(3.0, x));
    x += 0.05;
    if (x > 40.0) x = -40.0;
  }
}
BENCHMARK(BM_CompositeField);

static void BM_SpatialRhs(benchmark::State& state) {
  GasParams g = default_gas();
  const CompositeWave w = build_composite(g, default_pattern(g));
  const int n = static_cast<int>(state.range(0));
  SimState s = SimState::from_profile(g, Grid{80.0, n}, w.field, 0.0);
  const BoundaryFn bc = boundary_from_profile(w.field);
  for (auto _ : state) benchmark::DoNotOptimize(spatial_rhs(s, bc));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SpatialRhs)->Arg(1024)->Arg(4096);

static void BM_Step(benchmark::State& state) {
  GasParams g = default_gas();
  const CompositeWave w = build_composite(g, default_pattern(g));
  SimState s = SimState::from_profile(g, Grid{80.0, 1024}, w.field, 0.0);
  const BoundaryFn bc = boundary_from_profile(w.field);
  const double dt = stable_dt(s);
  for (auto _ : state) benchmark::DoNotOptimize(step(s, dt, bc));
}
BENCHMARK(BM_Step);

BENCHMARK_MAIN();
