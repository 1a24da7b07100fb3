#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "treelasso/treelasso.hpp"

using namespace treelasso;

namespace {

struct Instance {
  XTree tree;
  CordSet cover;
};

Instance make_instance(std::size_t n) {
  XTree t = random_tree(n, 1234 + n, 0.5, 5.0);
  auto order = t.taxa();
  std::shuffle(order.begin(), order.end(), std::mt19937_64(n));
  CordSet l = triplet_cover(t, min_order_transversal(t, order));
  return {std::move(t), std::move(l)};
}

void BM_Closure(benchmark::State& state) {
  const auto inst = make_instance(static_cast<std::size_t>(state.range(0)));
  const auto d = induced_distance(inst.tree, inst.cover);
  for (auto _ : state) benchmark::DoNotOptimize(closure(d));
}
BENCHMARK(BM_Closure)->RangeMultiplier(2)->Range(8, 64);

void BM_ClosureExact(benchmark::State& state) {
  const auto inst = make_instance(static_cast<std::size_t>(state.range(0)));
  const auto d = induced_distance(inst.tree, inst.cover);
  ClosureOptions opts;
  opts.exact_rational = true;
  for (auto _ : state) benchmark::DoNotOptimize(closure(d, opts));
}
BENCHMARK(BM_ClosureExact)->RangeMultiplier(2)->Range(8, 16);

void BM_NeighborJoining(benchmark::State& state) {
  const XTree t = random_tree(static_cast<std::size_t>(state.range(0)), 99, 0.5, 5.0);
  const auto d = induced_distance(t, all_cords(t.taxon_set()));
  for (auto _ : state) benchmark::DoNotOptimize(neighbor_joining(d));
}
BENCHMARK(BM_NeighborJoining)->RangeMultiplier(2)->Range(8, 128);

void BM_Reconstruct(benchmark::State& state) {
  const auto inst = make_instance(static_cast<std::size_t>(state.range(0)));
  const auto d = induced_distance(inst.tree, inst.cover);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(d));
}
BENCHMARK(BM_Reconstruct)->RangeMultiplier(2)->Range(8, 64);

void BM_Is2dTree(benchmark::State& state) {
  const auto inst = make_instance(static_cast<std::size_t>(state.range(0)));
  const auto taxa = inst.tree.taxon_set();
  for (auto _ : state) benchmark::DoNotOptimize(is_2dtree(inst.cover, taxa));
}
BENCHMARK(BM_Is2dTree)->RangeMultiplier(2)->Range(8, 128);

void BM_IsShellable(benchmark::State& state) {
  const auto inst = make_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_shellable(inst.tree, inst.cover));
}
BENCHMARK(BM_IsShellable)->RangeMultiplier(2)->Range(8, 64);

void BM_RankCertificate(benchmark::State& state) {
  const auto inst = make_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(edge_weight_lasso_certificate(inst.tree, inst.cover));
}
BENCHMARK(BM_RankCertificate)->RangeMultiplier(2)->Range(8, 32);

void BM_TopologicalOracle(benchmark::State& state) {
  const auto inst = make_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(topological_lasso_oracle(inst.tree, inst.cover));
}
BENCHMARK(BM_TopologicalOracle)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
