#include <benchmark/benchmark.h>

#include <vector>

#include "niggli/g6.hpp"
#include "niggli/random.hpp"
#include "niggli/reduction.hpp"

using namespace niggli;

namespace {

std::vector<G6Vector> random_cells(std::size_t n, double edge_max) {
  Rng rng(99);
  CellDistribution d;
  d.edge_max = edge_max;
  std::vector<G6Vector> out;
  CellParams c;
  while (out.size() < n)
    if (try_random_cell(rng, d, c)) out.push_back(cell_to_g6(c));
  return out;
}

}  // namespace

static void BM_NiggliReduce(benchmark::State& state) {
  const auto cells = random_cells(1024, static_cast<double>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(niggli_reduce(cells[i++ % cells.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_NiggliReduce)->Arg(10)->Arg(100);

static void BM_ReduceFast(benchmark::State& state) {
  const auto cells = random_cells(1024, 100);
  std::size_t i = 0;
  BasisTransform t;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce_fast(cells[i++ % cells.size()], t));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ReduceFast);

// Exhaustive search over bounded unimodular matrices, for comparison.
static void BM_BruteForce(benchmark::State& state) {
  const auto cells = random_cells(64, 10);
  std::vector<G6Vector> reduced;
  for (const auto& g : cells) reduced.push_back(niggli_reduce(g).reduced);
  unimodular_transforms(1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_reduce(reduced[i++ % reduced.size()], 1));
  }
}
BENCHMARK(BM_BruteForce)->Unit(benchmark::kMillisecond);
