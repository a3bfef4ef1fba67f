#include <benchmark/benchmark.h>

#include "spinekit/invariant.hpp"
#include "spinekit/ograph.hpp"
#include "spinekit/subpoly.hpp"
#include "spinekit/triangulation.hpp"

namespace {

void BM_GenerateFamily(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spinekit::generate_gn(s));
  }
}
BENCHMARK(BM_GenerateFamily)->Arg(0)->Arg(4)->Arg(16);

void BM_FromOgraph(benchmark::State& state) {
  const auto g = spinekit::generate_gn(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spinekit::from_ograph(g));
  }
}
BENCHMARK(BM_FromOgraph)->Arg(0)->Arg(4)->Arg(16);

void BM_EdgeClasses(benchmark::State& state) {
  const auto t = spinekit::from_ograph(spinekit::generate_gn(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spinekit::edge_classes(t));
  }
}
BENCHMARK(BM_EdgeClasses)->Arg(0)->Arg(4)->Arg(16);

void BM_BoundarySurface(benchmark::State& state) {
  const auto t = spinekit::from_ograph(spinekit::generate_gn(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spinekit::boundary_surface(t));
  }
}
BENCHMARK(BM_BoundarySurface)->Arg(0)->Arg(4)->Arg(16);

void BM_IsPoor(benchmark::State& state) {
  const auto t = spinekit::from_ograph(spinekit::generate_gn(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spinekit::is_poor(t));
  }
}
BENCHMARK(BM_IsPoor)->Arg(0)->Arg(4);

void BM_EpsilonInvariant(benchmark::State& state) {
  const auto t = spinekit::from_ograph(spinekit::generate_gn(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spinekit::epsilon_invariant(t));
  }
}
BENCHMARK(BM_EpsilonInvariant)->Arg(0)->Arg(4);

}  // namespace
