#include <benchmark/benchmark.h>

#include "hurwitz/elsv.hpp"
#include "hurwitz/enumeration.hpp"

using namespace hurwitz;

// Each kernel has a serial reference; pairs below run the same input.

static void BM_TMatrix(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(t_matrix(m, n, 0));
}
static void BM_TMatrixSerial(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(t_matrix_serial(m, n, 0));
}
BENCHMARK(BM_TMatrix)->Args({2, 4})->Args({3, 3});
BENCHMARK(BM_TMatrixSerial)->Args({2, 4})->Args({3, 3});

static void BM_SequenceScan(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  const auto lambda = ColoredPartition::identity_type(m, n);
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_bruteforce_word(m, n, {0, 0}, lambda));
}
static void BM_SequenceScanSerial(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  const auto lambda = ColoredPartition::identity_type(m, n);
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_bruteforce_word_serial(m, n, {0, 0}, lambda));
}
BENCHMARK(BM_SequenceScan)->Args({2, 3})->Args({3, 3});
BENCHMARK(BM_SequenceScanSerial)->Args({2, 3})->Args({3, 3});

static void BM_CoverCount(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  const Profile p = Profile::parse(m == 2 ? "2,1" : "2,1,0");
  const auto lambda = ColoredPartition::identity_type(m, n);
  for (auto _ : state) benchmark::DoNotOptimize(count_covers(m, n, p, lambda));
}
static void BM_CoverCountSerial(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  const Profile p = Profile::parse(m == 2 ? "2,1" : "2,1,0");
  const auto lambda = ColoredPartition::identity_type(m, n);
  for (auto _ : state) benchmark::DoNotOptimize(count_covers_serial(m, n, p, lambda));
}
BENCHMARK(BM_CoverCount)->Args({2, 3})->Args({3, 3});
BENCHMARK(BM_CoverCountSerial)->Args({2, 3})->Args({3, 3});

static void BM_ClassicalOracle(benchmark::State& state) {
  const Partition mu({static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(classical_bruteforce(mu, static_cast<int>(state.range(0)) - 1 + 2));
}
static void BM_ClassicalOracleSerial(benchmark::State& state) {
  const Partition mu({static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(classical_bruteforce_serial(mu, static_cast<int>(state.range(0)) - 1 + 2));
}
BENCHMARK(BM_ClassicalOracle)->Arg(3)->Arg(4);
BENCHMARK(BM_ClassicalOracleSerial)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
