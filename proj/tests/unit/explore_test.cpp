#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "tam/combine.hpp"
#include "tam/constructions.hpp"
#include "tam/explore.hpp"

using namespace tam;

namespace {

ExploreResult run(const TileSet& tiles, int tau, std::size_t max_tiles = 64, unsigned threads = 1) {
  ExploreConfig cfg;
  cfg.temperature = Temperature(tau);
  cfg.max_tiles = max_tiles;
  cfg.threads = threads;
  return explore(tiles, cfg);
}

std::vector<std::string> keys(const ProducibleSet& p) {
  std::vector<std::string> out;
  for (const auto& e : p.entries()) out.push_back(e.supertile.key());
  std::sort(out.begin(), out.end());
  return out;
}

// Replays a trace through combinations(); each step must be one of them.
bool replays(const Trace& t, const TileSet& tiles, Temperature tau) {
  Supertile at = t.start;
  for (const auto& step : t.steps) {
    bool found = false;
    for (const auto& a : combinations(at, step.partner, tiles, tau)) {
      if (a.result == step.result &&
          std::find(a.offsets.begin(), a.offsets.end(), step.offset) != a.offsets.end()) {
        found = true;
      }
    }
    if (!found) return false;
    at = step.result;
  }
  return true;
}

}  // namespace

TEST_SUITE("explore") {
  TEST_CASE("glueless tile") {
    auto r = run(TileSet({fx::tile("X")}), 2);
    CHECK(r.set.size() == 1);
    CHECK(r.report.saturated);
    CHECK(terminals(r.set, TileSet({fx::tile("X")}), Temperature(2)).size() == 1);
  }

  TEST_CASE("strength-2 pair") {
    auto tiles = fx::pair_ab(2);
    auto r = run(tiles, 2);
    CHECK(keys(r.set) == std::vector<std::string>{"0,0,0", "0,0,0;1,0,1", "0,0,1"});
    CHECK(r.set.saturated());
    auto t = terminals(r.set, tiles, Temperature(2));
    REQUIRE(t.size() == 1);
    CHECK(t[0].key() == "0,0,0;1,0,1");
    CHECK(strictly_self_assembles(r.set, tiles, Temperature(2), {{0, 0}, {1, 0}}));
    CHECK_FALSE(strictly_self_assembles(r.set, tiles, Temperature(2), {{0, 0}}));
    // Any translate of the target shape is the same shape.
    CHECK(strictly_self_assembles(r.set, tiles, Temperature(2), {{7, -3}, {8, -3}}));
  }

  TEST_CASE("terminals recomputed at another temperature") {
    auto tiles = fx::pair_ab(1);
    auto low = run(tiles, 1);
    CHECK(low.set.size() == 3);
    CHECK(terminals(low.set, tiles, Temperature(1)).size() == 1);
    // At temperature 2 nothing in the set attaches, so everything is terminal.
    CHECK(terminals(low.set, tiles, Temperature(2)).size() == 3);
  }

  TEST_CASE("comb(3) at temperature 1") {
    auto tiles = gen_comb(3);
    auto r = run(tiles, 1);
    CHECK(r.report.saturated);
    auto t = terminals(r.set, tiles, Temperature(1));
    REQUIRE(t.size() == 1);
    CHECK(fx::domain(t[0].assembly()) == fx::rect(3, 3));
    // Brute-force terminality: nothing in the set attaches per the window scan.
    for (const auto& e : r.set.entries()) {
      CHECK(oracle::window_scan(t[0], e.supertile, tiles, 1).empty());
    }
    CHECK(strictly_self_assembles(run(gen_comb(4), 1).set, gen_comb(4), Temperature(1), fx::rect(4, 4)));
  }

  TEST_CASE("witness sequences replay") {
    auto tiles = fx::pair_ab(2);
    auto r = run(tiles, 2);
    Supertile a(fx::at({{{0, 0}, 0}}));
    CHECK(witness_sequence(r.set, a).steps.empty());
    auto ab = witness_sequence(r.set, Supertile(fx::at({{{0, 0}, 0}, {{1, 0}, 1}})));
    CHECK(ab.steps.size() == 1);
    CHECK(replays(ab, tiles, Temperature(2)));

    auto comb = gen_comb(3);
    auto cr = run(comb, 1);
    auto term = terminals(cr.set, comb, Temperature(1)).at(0);
    auto trace = witness_sequence(cr.set, term);
    CHECK(trace.result() == term);
    CHECK(trace.start.size() == 1);
    std::size_t partner_excess = 0;
    for (const auto& s : trace.steps) partner_excess += s.partner.size() - 1;
    CHECK(trace.steps.size() == term.size() - 1 - partner_excess);
    CHECK(replays(trace, comb, Temperature(1)));

    CHECK_THROWS_WITH(witness_sequence(r.set, Supertile(fx::at({{{0, 0}, 1}, {{1, 0}, 0}}))),
                      "not producible under caps");
  }

  TEST_CASE("every entry's predecessors combine into it") {
    for (auto tiles : {gen_comb(3), gen_counter(2), gen_demo("error_prone")}) {
      for (int tau : {1, 2}) {
        auto r = run(tiles, tau, 7);
        for (const auto& e : r.set.entries()) {
          if (!e.left) {
            CHECK(e.supertile.size() == 1);
            continue;
          }
          const auto& l = r.set[*e.left].supertile;
          const auto& p = r.set[*e.right].supertile;
          CHECK(attach(l, p, e.offset) == e.supertile);
        }
      }
    }
  }

  TEST_CASE("caps make exploration unsaturated") {
    auto tiles = gen_comb(3);
    auto r = run(tiles, 1, 4);
    CHECK_FALSE(r.report.saturated);
    CHECK(r.report.cap_hits > 0);
    for (const auto& e : r.set.entries()) CHECK(e.supertile.size() <= 4);
    CHECK_THROWS_WITH(strictly_self_assembles(r.set, tiles, Temperature(1), fx::rect(3, 3)),
                      "inconclusive: exploration not saturated");

    ExploreConfig box;
    box.temperature = Temperature(1);
    box.bounding_box = std::pair<Coord, Coord>{2, 2};
    auto boxed = explore(tiles, box);
    CHECK_FALSE(boxed.report.saturated);
    for (const auto& e : boxed.set.entries()) {
      CHECK(e.supertile.width() <= 2);
      CHECK(e.supertile.height() <= 2);
    }
    CHECK(box.effective_max_tiles() == 4);

    ExploreConfig few;
    few.temperature = Temperature(1);
    few.max_supertiles = 5;
    auto limited = explore(tiles, few);
    CHECK(limited.set.size() == 5);
    CHECK_FALSE(limited.report.saturated);
  }

  TEST_CASE("invalid caps are rejected") {
    ExploreConfig cfg;
    cfg.max_tiles = 0;
    CHECK_THROWS_AS(explore(fx::pair_ab(2), cfg), Error);
    cfg = {};
    cfg.bounding_box = std::pair<Coord, Coord>{0, 3};
    CHECK_THROWS_AS(cfg.validate(), Error);
  }

  TEST_CASE("results do not depend on the thread count") {
    for (auto [tiles, tau] : {std::pair{gen_comb(4), 1}, {gen_counter(3), 2}, {gen_counter(2), 1},
                              {gen_demo("error_prone"), 2}, {gen_demo("error_prone"), 1}}) {
      {
        auto one = run(tiles, tau, 8, 1);
        auto many = run(tiles, tau, 8, 4);
        REQUIRE(one.set.size() == many.set.size());
        for (std::size_t i = 0; i < one.set.size(); ++i) {
          CHECK(one.set[i].supertile == many.set[i].supertile);
          CHECK(one.set[i].combinable == many.set[i].combinable);
        }
        CHECK(manifest(one.set, tiles) == manifest(many.set, tiles));
        CHECK(one.report.cap_hits == many.report.cap_hits);
      }
    }
  }

  TEST_CASE("manifest lines") {
    auto tiles = fx::pair_ab(2);
    auto r = run(tiles, 2);
    CHECK(manifest(r.set, tiles) == "0,0,0 1 0\n0,0,0;1,0,1 2 1\n0,0,1 1 0\n");
    CHECK(manifest(r.set, tiles, true) == "0,0,0;1,0,1 2 1\n");
  }

  TEST_CASE("producible at 2 implies producible at 1") {
    // Only the tile cap applies; sets whose temperature-1 run outgrows the
    // supertile budget are drawn again.
    oracle::Random rnd(31);
    int checked = 0;
    while (checked < 20) {
      auto tiles = rnd.tile_set(rnd.uniform(1, 4), rnd.uniform(2, 4), 2, 0.6);
      ExploreConfig cfg;
      cfg.max_tiles = 8;
      cfg.max_supertiles = 50'000;
      cfg.threads = 1;
      cfg.temperature = Temperature(1);
      auto low = explore(tiles, cfg);
      if (low.set.size() >= cfg.max_supertiles) continue;
      cfg.temperature = Temperature(2);
      auto high = explore(tiles, cfg);
      ++checked;
      for (const auto& e : high.set.entries()) CHECK(low.set.contains(e.supertile));
      for (const auto& e : low.set.entries()) {
        if (e.supertile.size() == 1) CHECK(high.set.contains(e.supertile));
      }
    }
  }

  TEST_CASE("canonical shape") {
    CHECK(canonical_shape({{3, 4}, {2, 5}, {3, 4}}) == std::vector<Point>{{1, 0}, {0, 1}});
    CHECK(canonical_shape({}).empty());
  }
}
