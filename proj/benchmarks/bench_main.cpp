#include <benchmark/benchmark.h>

#include "stripdef/surface.hpp"

namespace {

void BM_EnumerateArcs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto s = stripdef::make_surface(stripdef::Family::Crown, n,
                                  std::vector<bool>(n, true));
  for (auto _ : state) {
    auto arcs = stripdef::enumerate_arcs(s);
    benchmark::DoNotOptimize(arcs);
  }
}
BENCHMARK(BM_EnumerateArcs)->Arg(3)->Arg(5)->Arg(8);

void BM_CrossingMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto s = stripdef::make_surface(stripdef::Family::Moebius, n,
                                  std::vector<bool>(n, true));
  const auto arcs = stripdef::enumerate_arcs(s);
  for (auto _ : state) {
    long crossings = 0;
    for (const auto& a : arcs)
      for (const auto& b : arcs) crossings += stripdef::arcs_cross(s, a, b);
    benchmark::DoNotOptimize(crossings);
  }
}
BENCHMARK(BM_CrossingMatrix)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
