#include "lcaframe/analysis.hpp"
#include "lcaframe/tiles.hpp"
#include "lcaframe/uep.hpp"

#include <benchmark/benchmark.h>

using namespace lcaframe;

namespace {

FrameSystem integers(int M, int order) {
  return FrameSystem::build(std::make_shared<LatticeChain>(build_chain_Z(M)), Family{FamilyKind::BSpline, order}, 0, M);
}

void BM_UepVerify(benchmark::State& state) {
  auto sys = integers(10, static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (int k = 0; k < 10; ++k) benchmark::DoNotOptimize(verify_uep_matrix(sys.uep_matrix(k), SamplingPlan{}));
}
BENCHMARK(BM_UepVerify)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ParsevalIntegers(benchmark::State& state) {
  auto sys = integers(10, static_cast<int>(state.range(0)));
  std::mt19937_64 rng(kDefaultSeed);
  auto f = random_test_function(sys, rng);
  for (auto _ : state) benchmark::DoNotOptimize(parseval_residual(sys, f));
}
BENCHMARK(BM_ParsevalIntegers)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_FrameOperatorCyclic(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  auto sys = FrameSystem::build(std::make_shared<LatticeChain>(build_chain_ZN(M)), Family{FamilyKind::BSpline, 2}, 0, M);
  for (auto _ : state) benchmark::DoNotOptimize(frame_operator(sys));
}
BENCHMARK(BM_FrameOperatorCyclic)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_TileIterate(benchmark::State& state) {
  TileSpec spec{{{{1, -1}, {1, 1}}}, {1, 0}, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(tile_iterate(spec));
}
BENCHMARK(BM_TileIterate)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
