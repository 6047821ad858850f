#include <benchmark/benchmark.h>

#include "linper/flagmod.hpp"
#include "linper/levi.hpp"
#include "linper/rsorbits.hpp"
#include "linper/schur.hpp"
#include "linper/stratcomb.hpp"

using namespace linper;

static void BM_SchurIndexReport(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(schur_index_report(n, 2, 3));
}
BENCHMARK(BM_SchurIndexReport)->Arg(1)->Arg(2)->Arg(3);

static void BM_FlagCountPoly(benchmark::State& state) {
  const auto parts = partitions_of(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& mu : parts) benchmark::DoNotOptimize(cfl_count_poly(mu));
}
BENCHMARK(BM_FlagCountPoly)->Arg(6)->Arg(10);

static void BM_FlagCountBrute(benchmark::State& state) {
  const Partition mu = state.range(0) == 0 ? Partition{2, 1, 1} : Partition{2, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(cfl_count_brute(mu, 2));
}
BENCHMARK(BM_FlagCountBrute)->Arg(0)->Arg(1);

static void BM_AutCountBrute(benchmark::State& state) {
  const Partition mu{2, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(aut_count_brute(mu, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_AutCountBrute)->Arg(2)->Arg(3);

static void BM_CollidedFiberMass(benchmark::State& state) {
  const int dp = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(collided_fiber_mass(dp / 2, dp));
}
BENCHMARK(BM_CollidedFiberMass)->Arg(4)->Arg(6);

static void BM_KOrbits(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k_orbits(2, 2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_KOrbits)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_IndECharacter(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ind_E_class_character(2, 4));
}
BENCHMARK(BM_IndECharacter);

static void BM_LeviSweep(benchmark::State& state) {
  const auto L = BlockLevi::interleaved(2);
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_levi_inequality(L, bound, bound, 1));
}
BENCHMARK(BM_LeviSweep)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
