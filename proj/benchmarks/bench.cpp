#include <benchmark/benchmark.h>

#include "quasilab/abelian_group.hpp"
#include "quasilab/isomorphism.hpp"
#include "quasilab/model_finder.hpp"
#include "quasilab/structure.hpp"

namespace {

using namespace quasilab;

void BM_FindNeumann(benchmark::State& state) {
  SearchOptions o;
  o.order = static_cast<int>(state.range(0));
  o.identities.push_back(Builtin("neumann"));
  for (auto _ : state) benchmark::DoNotOptimize(FindAll(o));
}
BENCHMARK(BM_FindNeumann)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_FindMedial(benchmark::State& state) {
  SearchOptions o;
  o.order = static_cast<int>(state.range(0));
  o.identities.push_back(Builtin("medial"));
  for (auto _ : state) benchmark::DoNotOptimize(FindAll(o));
}
BENCHMARK(BM_FindMedial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  SearchOptions o;
  o.order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Count(o));
}
BENCHMARK(BM_Census)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_CensusUpToIso(benchmark::State& state) {
  SearchOptions o;
  o.order = 4;
  o.up_to_isomorphism = true;
  for (auto _ : state) benchmark::DoNotOptimize(FindAll(o));
}
BENCHMARK(BM_CensusUpToIso)->Unit(benchmark::kMillisecond);

void BM_Autotopies(benchmark::State& state) {
  const auto q = CyclicSubtractionTable(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Autotopies(q));
}
BENCHMARK(BM_Autotopies)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_GroupAutomorphisms(benchmark::State& state) {
  const auto g = GroupFromSpec("Z2xZ2xZ2xZ2");
  for (auto _ : state) benchmark::DoNotOptimize(AutomorphismGroup(g));
}
BENCHMARK(BM_GroupAutomorphisms)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const auto q = CyclicSubtractionTable(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(CanonicalForm(q));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
