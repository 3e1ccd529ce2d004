#include <benchmark/benchmark.h>

#include "compchains/poset.hpp"
#include "compchains/polyfrac.hpp"

using namespace compchains;

static void BM_LayerSerial(benchmark::State& state) {
  const auto a = Alphabet::S(4);
  for (auto _ : state) benchmark::DoNotOptimize(chain_counts(a, {}, state.range(0), -1, true));
}
BENCHMARK(BM_LayerSerial)->Arg(8)->Arg(10);

static void BM_LayerParallel(benchmark::State& state) {
  const auto a = Alphabet::S(4);
  for (auto _ : state) benchmark::DoNotOptimize(chain_counts(a, {}, state.range(0), -1, false));
}
BENCHMARK(BM_LayerParallel)->Arg(8)->Arg(10);

static MultiPoly dense(int vars, int degree) {
  MultiPoly p(1);
  MultiPoly s(1);
  for (int i = 1; i <= vars; ++i) s -= MultiPoly::var(i);
  for (int d = 0; d < degree; ++d) p = mul_serial(p, s);
  return p;
}

static void BM_PolyMulSerial(benchmark::State& state) {
  auto p = dense(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mul_serial(p, p));
}
BENCHMARK(BM_PolyMulSerial)->Arg(6)->Arg(10);

static void BM_PolyMulParallel(benchmark::State& state) {
  auto p = dense(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mul(p, p));
}
BENCHMARK(BM_PolyMulParallel)->Arg(6)->Arg(10);

BENCHMARK_MAIN();
