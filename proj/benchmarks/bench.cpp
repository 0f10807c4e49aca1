#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "tam/constructions.hpp"
#include "tam/explore.hpp"
#include "tam/fuzzy.hpp"
#include "tam/stability.hpp"

namespace {

// Full w x h rectangle of random tile types; bonds are
// whatever the glues give, so most of the work is in building the graph.
tam::Assembly block(int w, int h, std::size_t types, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<tam::Placement> ps;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      ps.push_back({{x, y}, static_cast<tam::TileIndex>(rng() % types)});
    }
  }
  return tam::Assembly(std::move(ps));
}

void BM_MinCut(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  auto tiles = tam::gen_comb(side);
  // The comb terminal; the raw assembly, since supertiles may cache the answer.
  tam::ExploreConfig cfg{.temperature = tam::Temperature(1)};
  auto r = tam::explore(tiles, cfg);
  auto term = tam::terminals(r.set, tiles, tam::Temperature(1)).front();
  for (auto _ : state) benchmark::DoNotOptimize(tam::is_stable(term.assembly(), tiles, tam::Temperature(1)));
  state.SetLabel(std::to_string(term.size()) + " tiles");
}
BENCHMARK(BM_MinCut)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_RandomBlockStability(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  auto tiles = tam::gen_counter(3);
  auto a = block(side, side, tiles.size(), 7);
  for (auto _ : state) benchmark::DoNotOptimize(tam::is_stable(a, tiles, tam::Temperature(2)));
}
BENCHMARK(BM_RandomBlockStability)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_ExploreComb(benchmark::State& state) {
  auto tiles = tam::gen_comb(static_cast<int>(state.range(0)));
  tam::ExploreConfig cfg{.temperature = tam::Temperature(1), .threads = 1};
  for (auto _ : state) benchmark::DoNotOptimize(tam::explore(tiles, cfg).report.supertiles);
}
BENCHMARK(BM_ExploreComb)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ExploreCounter(benchmark::State& state) {
  auto tiles = tam::gen_counter(static_cast<int>(state.range(0)));
  tam::ExploreConfig cfg{.temperature = tam::Temperature(2), .threads = 1};
  for (auto _ : state) benchmark::DoNotOptimize(tam::explore(tiles, cfg).report.supertiles);
}
BENCHMARK(BM_ExploreCounter)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_FuzzyDemo(benchmark::State& state) {
  auto tiles = tam::gen_demo("error_prone");
  tam::ExploreConfig cfg{.temperature = tam::Temperature(2), .max_tiles = 9, .threads = 1};
  for (auto _ : state) benchmark::DoNotOptimize(tam::fuzzy_check(tiles, cfg).violations.size());
}
BENCHMARK(BM_FuzzyDemo)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
