#include <benchmark/benchmark.h>

#include <random>

#include "tradekit/boolean_algebra.hpp"

using namespace tradekit;

namespace {

RationalMatrix intersection_matrix(const benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  return build_matrix(MatrixSpec::intersection(n, 2, n / 2, 1));
}

RationalMatrix random_rational(std::size_t size) {
  std::mt19937_64 rng(1);
  RationalMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      m(i, j) = Rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 7) + 1);
      m(i, j).canonicalize();
    }
  return m;
}

void BM_RankIntersection(benchmark::State& state) {
  const auto m = intersection_matrix(state);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}

void BM_RankIntersectionReference(benchmark::State& state) {
  const auto m = intersection_matrix(state);
  for (auto _ : state) benchmark::DoNotOptimize(reference::rank(m));
}

void BM_RankRandom(benchmark::State& state) {
  const auto m = random_rational(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}

void BM_RankRandomReference(benchmark::State& state) {
  const auto m = random_rational(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::rank(m));
}

void BM_BuildMatrix(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(intersection_matrix(state));
}

}  // namespace

BENCHMARK(BM_RankIntersection)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankIntersectionReference)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankRandom)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankRandomReference)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildMatrix)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
