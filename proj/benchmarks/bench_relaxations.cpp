#include <benchmark/benchmark.h>

#include "mlrelax/fixtures.hpp"
#include "mlrelax/linearization.hpp"
#include "mlrelax/relaxations.hpp"
#include "mlrelax/sampling.hpp"
#include "mlrelax/verify.hpp"

using namespace mlrelax;

namespace {

MultilinearInstance fig2_instance(int k) {
  MultilinearInstance inst;
  inst.hypergraph = fixtures::fig2_hypergraph(k);
  inst.objective = {{1, VarKey::edge({1, 2, 3})}, {-1, VarKey::edge({1, 2, 4})}, {-1, VarKey::singleton(3)}};
  return inst;
}

void BM_EnumerateFlowers(benchmark::State& state) {
  const auto g = fixtures::fig2_hypergraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_flowers(g));
}
BENCHMARK(BM_EnumerateFlowers)->DenseRange(4, 12, 4);

void BM_SeparateFlower(benchmark::State& state) {
  Sampler sampler(1);
  const auto g = sampler.hypergraph(8, 8, static_cast<int>(state.range(0)));
  Point p;
  for (const auto& k : g.keys()) {
    p[k] = Rational(sampler.uniform(1, 3), 4);
    p[k].canonicalize();
  }
  for (auto _ : state) benchmark::DoNotOptimize(separate_flower(g, p));
}
BENCHMARK(BM_SeparateFlower)->Arg(4)->Arg(8)->Arg(16);

void BM_FlowerLp(benchmark::State& state) {
  const auto inst = fig2_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bound_static(inst, FlowerRelaxation{}, 0));
}
BENCHMARK(BM_FlowerLp)->Arg(3)->Arg(6)->Arg(9);

void BM_CuttingPlane(benchmark::State& state) {
  const auto inst = fig2_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bound_cutting_plane(inst, 0, 1000, 0));
}
BENCHMARK(BM_CuttingPlane)->Arg(3)->Arg(6)->Arg(9);

void BM_ProjectRelaxation(benchmark::State& state) {
  const auto g = fixtures::fig1_hypergraph();
  const auto d = fixtures::fig1_nonpartitioning();
  for (auto _ : state) benchmark::DoNotOptimize(project_relaxation(d, g));
}
BENCHMARK(BM_ProjectRelaxation);

void BM_TheoremFig2(benchmark::State& state) {
  const auto g = fixtures::fig2_hypergraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_theorem(g));
}
BENCHMARK(BM_TheoremFig2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
