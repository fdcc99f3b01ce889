#include "treewiener/growth.hpp"
#include "treewiener/tree.hpp"

#include <benchmark/benchmark.h>

using namespace treewiener;

static void BM_Subdivision(benchmark::State& state) {
  const TreeGraph tree = random_tree(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(first_order_subdivision(tree));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Subdivision)->RangeMultiplier(8)->Range(64, 262144);

static void BM_StarFractal(benchmark::State& state) {
  const TreeGraph tree = random_tree(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(star_fractal(tree, 3));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_StarFractal)->RangeMultiplier(8)->Range(64, 262144);

static void BM_VertexOp(benchmark::State& state) {
  const TreeGraph tree = random_tree(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(vertex_op(tree, 3));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_VertexOp)->RangeMultiplier(8)->Range(64, 262144);

static void BM_RandomTree(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_tree(static_cast<std::size_t>(state.range(0)), ++seed));
}
BENCHMARK(BM_RandomTree)->RangeMultiplier(8)->Range(64, 262144);
