#include <benchmark/benchmark.h>

#include <braidlex/appendix.hpp>
#include <braidlex/automaton.hpp>
#include <braidlex/oracle.hpp>
#include <braidlex/spectral.hpp>

using namespace braidlex;

static void BM_Build(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Automaton::build(n).size());
  state.counters["states"] = static_cast<double>(Automaton::build(n).size());
}
BENCHMARK(BM_Build)->DenseRange(4, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_CountWords(benchmark::State& state) {
  const auto a = Automaton::build(static_cast<int>(state.range(0)));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_words(a, k).total);
}
BENCHMARK(BM_CountWords)
    ->Args({2, 50})
    ->Args({5, 100})
    ->Args({8, 100})
    ->Unit(benchmark::kMillisecond);

static void BM_Perron(benchmark::State& state) {
  const auto r = recurrent_matrix(Automaton::build(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(perron(r).lambda);
  state.counters["dim"] = static_cast<double>(r.dim());
}
BENCHMARK(BM_Perron)->DenseRange(3, 9, 2)->Unit(benchmark::kMillisecond);

static void BM_BuildRDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(appendix::build_R_direct(n).nnz());
}
BENCHMARK(BM_BuildRDirect)->DenseRange(5, 11, 2)->Unit(benchmark::kMillisecond);

static void BM_CanonicalRecurrentMatrix(benchmark::State& state) {
  const auto a = Automaton::build(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(appendix::canonical_recurrent_matrix(a).nnz());
}
BENCHMARK(BM_CanonicalRecurrentMatrix)->DenseRange(5, 9, 2)->Unit(benchmark::kMillisecond);

static void BM_OracleLanguage(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::enumerate_language(n, k).size());
}
BENCHMARK(BM_OracleLanguage)->Args({3, 6})->Args({4, 6})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
