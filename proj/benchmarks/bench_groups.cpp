#include <benchmark/benchmark.h>

#include "primcover/actions.hpp"
#include "primcover/lattice.hpp"

using namespace primcover;

static void BM_StabilizerChain(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto g = PermGroup::symmetric(n);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_StabilizerChain)->DenseRange(5, 10);

static void BM_CosetAction(benchmark::State& state) {
  const auto s7 = PermGroup::symmetric(7);
  const auto f7 = PermGroup::from_generators(
      {Permutation::parse("(1,2,3,4,5,6,7)", 7), Permutation::parse("(2,4,3,7,5,6)", 7)});
  for (auto _ : state) benchmark::DoNotOptimize(coset_action(s7, f7).size());
}
BENCHMARK(BM_CosetAction);

static void BM_MinIndex(benchmark::State& state) {
  const auto s7 = PermGroup::symmetric(7);
  const auto action = coset_action(s7, PermGroup::from_generators({Permutation::parse("(1,2,3,4,5,6,7)", 7)}));
  for (auto _ : state) benchmark::DoNotOptimize(min_index(action).first);
}
BENCHMARK(BM_MinIndex);

static void BM_SubgroupLattice(benchmark::State& state) {
  const auto g = PermGroup::symmetric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_subgroup_classes(g).size());
}
BENCHMARK(BM_SubgroupLattice)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
