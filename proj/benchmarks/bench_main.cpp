#include <benchmark/benchmark.h>

#include "cayley/construct.hpp"
#include "cayley/oracle.hpp"

using namespace cayley;

static void BM_PowerCycleTotal(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto n = 4 * (k + 1) + 1;
  for (auto _ : state) benchmark::DoNotOptimize(construct::total_color_power_cycle(n, k));
}
BENCHMARK(BM_PowerCycleTotal)->Arg(3)->Arg(5)->Arg(7);

static void BM_VerifyTotal(benchmark::State& state) {
  const auto r = construct::total_color_power_cycle(25, 5);
  for (auto _ : state) benchmark::DoNotOptimize(chroma::verify_total(r.graph, r.matrix));
}
BENCHMARK(BM_VerifyTotal);

static void BM_SymTotal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(construct::total_color_sym(n));
}
BENCHMARK(BM_SymTotal)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_AltThreeColoring(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(construct::alt_three_coloring(n));
}
BENCHMARK(BM_AltThreeColoring)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_ChromaticNumber(benchmark::State& state) {
  const auto g = graph::power_cycle(13, 5);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::chromatic_number(g));
}
BENCHMARK(BM_ChromaticNumber)->Unit(benchmark::kMillisecond);

static void BM_TotalChromaticGyro(benchmark::State& state) {
  const auto t = gyro::default_table(8);
  const auto g = graph::cayley_gyro(t, construct::gyro_generators(t, {1, -1, 2, -2}));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::total_chromatic_number(g));
}
BENCHMARK(BM_TotalChromaticGyro)->Unit(benchmark::kMillisecond);

static void BM_GyroAxioms(benchmark::State& state) {
  const auto t = gyro::default_table(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gyro::verify_axioms(t));
}
BENCHMARK(BM_GyroAxioms)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
