#include <benchmark/benchmark.h>

#include "niggli/boundaries.hpp"
#include "niggli/characters.hpp"
#include "niggli/montecarlo.hpp"
#include "niggli/projector.hpp"

using namespace niggli;

static void BM_IntersectProjectors(benchmark::State& state) {
  const CaseSet s = CaseSet::parse("1679ACD");
  for (auto _ : state) benchmark::DoNotOptimize(intersect_projectors(s));
}
BENCHMARK(BM_IntersectProjectors);

static void BM_Classify(benchmark::State& state) {
  const G6Vector g{4, 4, 9, -1, -2, -3};
  for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(BM_Classify);

static void BM_Probe5d(benchmark::State& state) {
  ProbeConfig c;
  c.seed = 1;
  c.trials = static_cast<std::uint64_t>(state.range(0));
  c.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(probe_5d(c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Probe5d)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_ProbeBoundary(benchmark::State& state) {
  ProbeConfig c;
  c.seed = 1;
  c.trials = 10000;
  c.threads = 1;
  c.boundary_projector = intersect_projectors(CaseSet::parse("12"));
  for (auto _ : state) benchmark::DoNotOptimize(probe_boundary(c));
}
BENCHMARK(BM_ProbeBoundary)->Unit(benchmark::kMillisecond);
