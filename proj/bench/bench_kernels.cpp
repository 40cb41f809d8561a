#include <benchmark/benchmark.h>

#include "howe/bn_characters.hpp"
#include "howe/howe_unipotent.hpp"
#include "howe/oracle.hpp"

using namespace howe;

namespace {

void BM_ClassSizesSerial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_class_sizes_serial(n));
}

void BM_ClassSizesParallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_class_sizes_parallel(n));
}

// largest tables of the acceptance range: k = 0, r = r' = 4, and k = 3 against k' = 2
TowerContext first(int k, int r) { return {3, triangular(k) % 2, witt_index_of_cuspidal(k) + r}; }
TowerContext second(int k, int parity, int r) {
    return {3, parity, witt_index_of_cuspidal(default_theta_cuspidal(k, parity)) + r};
}

void BM_OmegaSerial(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int r = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(omega_unipotent_serial(first(k, r), second(k, 0, r), k));
}

void BM_OmegaParallel(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int r = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(omega_unipotent(first(k, r), second(k, 0, r), k));
}

void BM_OracleSerial(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const auto omega = oracle::omega_character(r, r, OmegaFormula::u1, LinearCharacter::coxeter_sign);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::omega_multiplicities_serial(omega));
}

void BM_OracleParallel(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const auto omega = oracle::omega_character(r, r, OmegaFormula::u1, LinearCharacter::coxeter_sign);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::omega_multiplicities(omega));
}

}  // namespace

BENCHMARK(BM_ClassSizesSerial)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassSizesParallel)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OmegaSerial)->Args({0, 4})->Args({0, 6})->Args({3, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OmegaParallel)->Args({0, 4})->Args({0, 6})->Args({3, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSerial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
