#include <benchmark/benchmark.h>

#include "shidoku/action.hpp"
#include "shidoku/board.hpp"
#include "shidoku/burnside.hpp"
#include "shidoku/nests.hpp"
#include "shidoku/search.hpp"
#include "shidoku/standard_groups.hpp"

namespace {

using namespace shidoku;

void BM_EnumerateAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all());
}
BENCHMARK(BM_EnumerateAll);

void BM_GenerateG4(benchmark::State& state) {
  std::vector<Generator> gens = standard::position_generators();
  for (const auto& g : standard::relabel_generators()) gens.push_back(g);
  for (auto _ : state) benchmark::DoNotOptimize(generate(gens).order());
}
BENCHMARK(BM_GenerateG4)->Unit(benchmark::kMillisecond);

void BM_OrbitsG4(benchmark::State& state) {
  const SymmetryGroup g = standard::g4();
  for (auto _ : state) benchmark::DoNotOptimize(orbits(g, all_boards()).block_count());
}
BENCHMARK(BM_OrbitsG4)->Unit(benchmark::kMillisecond);

void BM_BurnsideG4(benchmark::State& state) {
  const SymmetryGroup g = standard::g4();
  for (auto _ : state) benchmark::DoNotOptimize(burnside(g).orbit_count);
}
BENCHMARK(BM_BurnsideG4)->Unit(benchmark::kMillisecond);

void BM_H4Canonicalize(benchmark::State& state) {
  const auto& boards = all_boards();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(h4_canonicalize(boards[i]));
    i = (i + 1) % boards.size();
  }
}
BENCHMARK(BM_H4Canonicalize);

void BM_SearchProducts(benchmark::State& state) {
  const auto ppool = default_position_pool();
  const auto rpool = default_relabel_pool();
  for (auto _ : state) benchmark::DoNotOptimize(search_products(ppool, rpool).size());
}
BENCHMARK(BM_SearchProducts)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
