#include <benchmark/benchmark.h>

#include "declab/cantor.hpp"
#include "declab/exponent_system.hpp"
#include "declab/expsum.hpp"
#include "declab/simplex.hpp"

using namespace declab;

static void BM_SolveSmallAlpha(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimal_exponent(Rat(1, 2), K, Regime::SmallAlpha));
  }
}
BENCHMARK(BM_SolveSmallAlpha)->Arg(2)->Arg(5)->Arg(8);

static void BM_WeightedCertificate(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_paper_certificate(Rat(1, 2), K, Regime::SmallAlpha));
  }
}
BENCHMARK(BM_WeightedCertificate)->Arg(4)->Arg(8);

static void BM_BuildCantor(benchmark::State& state) {
  const CantorSpec spec(3, {0, 2}, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_cantor(spec));
  }
}
BENCHMARK(BM_BuildCantor)->Arg(6)->Arg(12);

static void BM_EnergyLevel3(benchmark::State& state) {
  const auto lift = parabola_lift(build_cantor(CantorSpec(3, {0, 2}, 3)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(energy(lift, static_cast<long>(state.range(0))));
  }
}
BENCHMARK(BM_EnergyLevel3)->Arg(4)->Arg(8);

static void BM_ExpSumGrid(benchmark::State& state) {
  const CantorLevel level = build_cantor(CantorSpec(3, {0, 2}, static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(empirical_dec_lower(level, Rat(8)));
  }
}
BENCHMARK(BM_ExpSumGrid)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
