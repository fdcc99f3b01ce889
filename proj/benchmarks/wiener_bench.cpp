#include "treewiener/closed_form.hpp"
#include "treewiener/models.hpp"
#include "treewiener/tree.hpp"

#include <benchmark/benchmark.h>

using namespace treewiener;

static void BM_WienerBfs(benchmark::State& state) {
  const TreeGraph tree = random_tree(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(wiener_bfs(tree, 1));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WienerBfs)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oNSquared);

static void BM_WienerSubtree(benchmark::State& state) {
  const TreeGraph tree = random_tree(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(wiener_subtree(tree));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WienerSubtree)->RangeMultiplier(4)->Range(64, 262144)->Complexity(benchmark::oN);

static void BM_OdotClosedForm(benchmark::State& state) {
  const ModelParams p{static_cast<std::uint32_t>(state.range(0)), 3};
  for (auto _ : state) benchmark::DoNotOptimize(odot_wiener(p));
}
BENCHMARK(BM_OdotClosedForm)->Arg(10)->Arg(100)->Arg(1000);

static void BM_StarClosedForm(benchmark::State& state) {
  const ModelParams p{static_cast<std::uint32_t>(state.range(0)), 1};
  for (auto _ : state) benchmark::DoNotOptimize(star_wiener(p));
}
BENCHMARK(BM_StarClosedForm)->Arg(10)->Arg(100)->Arg(1000);

static void BM_StarRecursion(benchmark::State& state) {
  const ModelParams p{static_cast<std::uint32_t>(state.range(0)), 1};
  for (auto _ : state) benchmark::DoNotOptimize(star_wiener_recursive(p));
}
BENCHMARK(BM_StarRecursion)->Arg(10)->Arg(100)->Arg(1000);
