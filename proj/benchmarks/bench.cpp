#include <benchmark/benchmark.h>

#include "skein/braid_word.hpp"
#include "skein/hecke.hpp"
#include "skein/poly.hpp"
#include "skein/system.hpp"
#include "skein/trace.hpp"

using namespace skein;

namespace {

// caches are cleared every iteration, otherwise only the first one does work
void cold() {
  clear_hecke_caches();
  clear_trace_caches();
}

void BM_TraceLoopMonomial(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  auto wd = parse_word("t^2 t1^" + std::to_string(k) + " s1", 2);
  for (auto _ : state) {
    cold();
    benchmark::DoNotOptimize(markov_trace(wd));
  }
}
BENCHMARK(BM_TraceLoopMonomial)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_TraceThreeStrands(benchmark::State& state) {
  auto wd = parse_word("t^2 t1^-1 t2 s1 s2^-1 s1 t1", 3);
  for (auto _ : state) {
    cold();
    benchmark::DoNotOptimize(markov_trace(wd));
  }
}
BENCHMARK(BM_TraceThreeStrands)->Unit(benchmark::kMillisecond);

void BM_Reduce(benchmark::State& state) {
  auto wd = parse_word("s1 t s1 t1' s2 t^-1 s2^-1 t2", 3);
  for (auto _ : state) {
    cold();
    benchmark::DoNotOptimize(to_algebra(wd));
  }
}
BENCHMARK(BM_Reduce)->Unit(benchmark::kMillisecond);

void BM_BuildSystem(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  BuildOptions opts;
  opts.threads = 1;
  for (auto _ : state) {
    cold();
    benchmark::DoNotOptimize(build_system(k, 2, 2, opts));
  }
}
BENCHMARK(BM_BuildSystem)->DenseRange(-1, 3)->Unit(benchmark::kMillisecond);

void BM_Eliminate(benchmark::State& state) {
  auto sys = build_system(static_cast<int>(state.range(0)), 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(eliminate(sys));
}
BENCHMARK(BM_Eliminate)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Gcd(benchmark::State& state) {
  Poly q = Poly::q(), z = Poly::z();
  Poly f = (q * q - q * z + 1).pow(3) * (q - z - 1).pow(2);
  Poly a = f * (q * z + 3), b = f * (z * z - q + 2);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_Gcd);

}  // namespace

BENCHMARK_MAIN();
