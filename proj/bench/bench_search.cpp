#include <benchmark/benchmark.h>

#include "pathpack/dual.hpp"
#include "pathpack/generate.hpp"

using namespace pathpack;

namespace {

Network instance(int inner) {
  GenParams p;
  p.terminals = 4;
  p.nodes = 4 + inner;
  p.edges = 8 + inner;
  p.clutter_density = 0.5;
  p.seed = 42;
  p.ensure_eulerian = true;
  p.ensure_flat = true;
  return generate(p);
}

void BM_search_parallel(benchmark::State& state) {
  Network n = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(search_certificate(n).min_value);
}

void BM_search_serial(benchmark::State& state) {
  Network n = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(search_certificate_serial(n).min_value);
}

}  // namespace

BENCHMARK(BM_search_parallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_search_serial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
