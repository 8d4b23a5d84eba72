// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include "qsym/characters.hpp"
#include "qsym/suite.hpp"

namespace {

void BM_ConvPowerSerial(benchmark::State& state) {
  const auto chi = qsym::build_character(5, 1);
  const auto M = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qsym::conv_power_serial(chi, 3, M));
}
BENCHMARK(BM_ConvPowerSerial)->Arg(512)->Arg(2048)->Arg(8192)->Unit(benchmark::kMillisecond);

void BM_ConvPowerParallel(benchmark::State& state) {
  const auto chi = qsym::build_character(5, 1);
  const auto M = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qsym::conv_power(chi, 3, M));
}
BENCHMARK(BM_ConvPowerParallel)->Arg(512)->Arg(2048)->Arg(8192)->Unit(benchmark::kMillisecond);

qsym::GridSpec theorem2_grid() {
  qsym::GridSpec g;
  g.ab = {{1, 3}, {3, 5}};
  g.moduli = {1, 3};
  g.orders = {1, 2};
  g.n_values = {0, 2, 4, 6};
  g.q_values = {0.5};
  g.x_values = {0.5};
  return g;
}

void BM_SuiteSerial(benchmark::State& state) {
  const auto grid = theorem2_grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsym::run_suite_serial(qsym::IdentityId::T2, grid, {1e-12, 20000}));
  }
}
BENCHMARK(BM_SuiteSerial)->Unit(benchmark::kMillisecond);

void BM_SuiteParallel(benchmark::State& state) {
  const auto grid = theorem2_grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsym::run_suite(qsym::IdentityId::T2, grid, {1e-12, 20000}));
  }
}
BENCHMARK(BM_SuiteParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
