#include <benchmark/benchmark.h>

#include <numbers>

#include "spinekit/golden_ring.hpp"
#include "spinekit/volume.hpp"

namespace {

void BM_EpsPow(benchmark::State& state) {
  const long long k = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spinekit::eps_pow(k));
  }
}
BENCHMARK(BM_EpsPow)->Arg(64)->Arg(-64)->Arg(512);

void BM_GoldenMul(benchmark::State& state) {
  const spinekit::GoldenInt x = spinekit::eps_pow(-200);
  const spinekit::GoldenInt y = spinekit::eps_pow(173);
  for (auto _ : state) {
    benchmark::DoNotOptimize(x * y);
  }
}
BENCHMARK(BM_GoldenMul);

void BM_Lobachevsky(benchmark::State& state) {
  double x = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spinekit::lobachevsky(x));
  }
}
BENCHMARK(BM_Lobachevsky)->Unit(benchmark::kMillisecond);

void BM_VolumeIntegral(benchmark::State& state) {
  const spinekit::Angle theta{2.0 * std::numbers::pi / 15.0};
  benchmark::DoNotOptimize(spinekit::vol_regular_truncated_integral(theta));  // warm the cache
  for (auto _ : state) {
    benchmark::DoNotOptimize(spinekit::vol_regular_truncated_integral(theta));
  }
}
BENCHMARK(BM_VolumeIntegral)->Unit(benchmark::kMillisecond);

void BM_VolumeClosedForm(benchmark::State& state) {
  const spinekit::Angle theta{2.0 * std::numbers::pi / 15.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(spinekit::vol_regular_truncated_closed(theta));
  }
}
BENCHMARK(BM_VolumeClosedForm)->Unit(benchmark::kMillisecond);

}  // namespace
