#include <benchmark/benchmark.h>

#include "tgr/plucker.hpp"

namespace {

const tgr::PluckerMap& reference_map() {
  static const tgr::PluckerMap map = tgr::build_plucker_map(tgr::reference_section_set());
  return map;
}

tgr::Ideal wedge_ideal() {
  const auto& c = reference_map().cubics;
  return tgr::Ideal(tgr::rings::plane(), {c.begin(), c.end()});
}

void BM_BuchbergerWedgeCubics(benchmark::State& state) {
  const tgr::Ideal ideal = wedge_ideal();
  for (auto _ : state) benchmark::DoNotOptimize(tgr::buchberger(ideal));
}
BENCHMARK(BM_BuchbergerWedgeCubics);

void BM_ProjectiveEmptiness(benchmark::State& state) {
  const tgr::Ideal ideal = wedge_ideal();
  for (auto _ : state) benchmark::DoNotOptimize(tgr::projective_emptiness(ideal));
}
BENCHMARK(BM_ProjectiveEmptiness);

void BM_ImageHilbertSample(benchmark::State& state) {
  const int e = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tgr::image_hilbert_samples(reference_map(), e, e));
}
BENCHMARK(BM_ImageHilbertSample)->DenseRange(2, 7)->Unit(benchmark::kMillisecond);

void BM_ImageIdealElimination(benchmark::State& state) {
  const auto degree = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tgr::image_ideal(reference_map(), degree));
}
BENCHMARK(BM_ImageIdealElimination)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

void BM_WSliceFiber(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tgr::w_slice_fiber(reference_map()));
}
BENCHMARK(BM_WSliceFiber);

void BM_InjectivityLocus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tgr::injectivity_locus(reference_map(), 0));
}
BENCHMARK(BM_InjectivityLocus)->Unit(benchmark::kMillisecond);

void BM_ImmersionCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tgr::immersion_check(reference_map()));
}
BENCHMARK(BM_ImmersionCheck)->Unit(benchmark::kMillisecond);

void BM_RandomPipeline(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tgr::generic_injectivity_pipeline(tgr::random_section_set(seed, 5), seed));
    ++seed;
  }
}
BENCHMARK(BM_RandomPipeline)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
