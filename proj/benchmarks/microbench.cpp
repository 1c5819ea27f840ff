#include <benchmark/benchmark.h>

#include "hypercount/canonical.hpp"
#include "hypercount/counting.hpp"
#include "hypercount/degeneracy.hpp"
#include "hypercount/generators.hpp"
#include "hypercount/patterns.hpp"

using namespace hypercount;

namespace {

Hypergraph ladder_input(int n) { return random_bounded_degeneracy(n, 3LL * n, 2, 4, 42); }

const Hypergraph kC5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});

void bm_compute_ordering(benchmark::State& state) {
  Hypergraph g = ladder_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_ordering(g, 0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_compute_ordering)->Arg(10000)->Arg(30000)->Arg(100000)->Complexity();

void bm_count_c5_homs(benchmark::State& state) {
  Hypergraph g = ladder_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_homs(g, kC5, 0, 1));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_count_c5_homs)->Arg(10000)->Arg(30000)->Arg(100000)
    ->Unit(benchmark::kMillisecond)->Complexity();

void bm_count_c5_subs(benchmark::State& state) {
  Hypergraph g = ladder_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_subs(g, kC5, 0, 1));
}
BENCHMARK(bm_count_c5_subs)->Arg(10000)->Arg(30000)->Unit(benchmark::kMillisecond);

void bm_count_dah_homs(benchmark::State& state) {
  Hypergraph g = ladder_input(static_cast<int>(state.range(0)));
  Dah gd = orient(g, compute_ordering(g, 0).ordering);
  std::vector<OrientationClass> classes = orientation_classes(kC5);
  for (auto _ : state) {
    long long total = 0;
    for (const OrientationClass& cls : classes)
      total += cls.size * count_dah_homs(cls.rep, gd, 0);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(bm_count_dah_homs)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void bm_canonical_form(benchmark::State& state) {
  Hypergraph h = random_hypergraph(static_cast<int>(state.range(0)), 12, 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(h));
}
BENCHMARK(bm_canonical_form)->Arg(6)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
