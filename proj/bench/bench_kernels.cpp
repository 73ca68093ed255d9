// Serial reference kernels against the OpenMP versions.
//
//   ./eisen_bench --benchmark_filter=Census

#include "eisen/census.hpp"
#include "eisen/density.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace eisen;

void BM_CensusSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::exact_census(2, static_cast<std::uint64_t>(state.range(0))));
}

void BM_CensusParallel(benchmark::State& state) {
  CensusOptions o;
  o.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(exact_census(2, static_cast<std::uint64_t>(state.range(0)), o));
}

void BM_MonteCarloSerial(benchmark::State& state) {
  MonteCarloOptions o;
  o.samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::monte_carlo(3, 1'000'000, o));
}

void BM_MonteCarloParallel(benchmark::State& state) {
  MonteCarloOptions o;
  o.samples = static_cast<std::uint64_t>(state.range(0));
  o.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo(3, 1'000'000, o));
}

void BM_RhoSerial(benchmark::State& state) {
  const auto primes = first_primes(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::compute_rho(2, primes));
}

void BM_RhoParallel(benchmark::State& state) {
  const auto primes = first_primes(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_rho(2, primes));
}

}  // namespace

BENCHMARK(BM_CensusSerial)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Args({20, 1})->Args({20, 2})->Args({20, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloSerial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloParallel)->Args({2000, 1})->Args({2000, 2})->Args({2000, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RhoSerial)->Arg(10'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RhoParallel)->Arg(10'000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
