#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "tam/combine.hpp"
#include "tam/constructions.hpp"
#include "tam/fuzzy.hpp"
#include "tam/stability.hpp"

using namespace tam;

namespace {

ExploreConfig caps(std::size_t max_tiles = 16) {
  ExploreConfig cfg;
  cfg.max_tiles = max_tiles;
  cfg.threads = 2;
  return cfg;
}

}  // namespace

TEST_SUITE("fuzzy") {
  TEST_CASE("glueless tile") {
    TileSet tiles({fx::tile("X")});
    auto r = fuzzy_check(tiles, caps());
    CHECK(r.sets.dp->size() == 1);
    CHECK(r.sets.dt.size() == 1);
    CHECK(r.sets.pp->size() == 1);
    CHECK(r.sets.ps.size() == 1);
    CHECK(r.verdict == Verdict::Pass);
  }

  TEST_CASE("strength-2 pair: PP adds nothing") {
    auto tiles = gen_demo("all_strength2");
    auto sets = compute_sets(tiles, caps());
    CHECK(sets.dp->size() == 3);
    CHECK(sets.pp->size() == 3);
    CHECK(sets.dt.size() == 1);
    CHECK(sets.ps.size() == 3);
    auto r = fuzzy_check(tiles, caps());
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.violations.empty());
  }

  TEST_CASE("strength-1 pair: the joined pair is plausible but not stable") {
    auto tiles = gen_demo("strength1_pair");
    auto sets = compute_sets(tiles, caps());
    Supertile ab(fx::at({{{0, 0}, 0}, {{1, 0}, 1}}));
    CHECK(sets.pp->contains(ab));
    CHECK_FALSE(sets.in_ps(ab));
    CHECK(sets.dp->size() == 2);
    CHECK(sets.pp->size() > sets.dp->size());
    CHECK(sets.ps.size() == 2);
    CHECK(fuzzy_check(tiles, caps()).verdict == Verdict::Pass);
  }

  TEST_CASE("closures") {
    auto tiles = gen_demo("all_strength2");
    auto sets = compute_sets(tiles, caps());
    Supertile a(fx::at({{{0, 0}, 0}}));
    auto c = grow_closure(a, sets, tiles, caps());
    CHECK(c.saturated);
    REQUIRE(c.members.size() == 2);
    CHECK(c.members[0].supertile == a);
    CHECK_FALSE(c.members[0].terminal);
    CHECK(c.members[1].terminal);
    CHECK(c.trace_to(1).steps.size() == 1);

    auto done = grow_closure(sets.dt[0], sets, tiles, caps());
    REQUIRE(done.members.size() == 1);
    CHECK(done.members[0].terminal);
  }

  TEST_CASE("error-prone demo fails with a replayable violation") {
    auto tiles = gen_demo("error_prone");
    auto r = fuzzy_check(tiles, caps());
    CHECK(r.verdict == Verdict::Fail);
    REQUIRE_FALSE(r.violations.empty());
    const auto& v = r.violations.front();
    CHECK(v.kind == ViolationKind::Growth);
    CHECK(v.origin.size() <= 6);
    CHECK(r.sets.in_ps(v.origin));
    CHECK_FALSE(r.sets.in_dt(v.bad_terminal));
    CHECK(v.trace.start == v.origin);
    CHECK(v.trace.result() == v.bad_terminal);
    CHECK(is_stable(v.bad_terminal, tiles, Temperature(2)));

    // Each step attaches a DP member or an earlier supertile of the trace.
    std::vector<Supertile> seen{v.trace.start};
    Supertile at = v.trace.start;
    for (const auto& step : v.trace.steps) {
      bool supplied = r.sets.dp->contains(step.partner) ||
                      std::find(seen.begin(), seen.end(), step.partner) != seen.end();
      CHECK(supplied);
      CHECK(attach(at, step.partner, step.offset) == step.result);
      auto options = combinations(at, step.partner, tiles, Temperature(2));
      CHECK(std::any_of(options.begin(), options.end(), [&](const Attachment& a) { return a.result == step.result; }));
      at = step.result;
      seen.push_back(at);
    }

    // Nothing in DP can attach to the bad terminal.
    for (const auto& e : r.sets.dp->entries()) {
      CHECK(combinations(v.bad_terminal, e.supertile, tiles, Temperature(2)).empty());
    }
  }

  TEST_CASE("containments hold on every run") {
    for (auto tiles : {gen_demo("error_prone"), gen_demo("strength1_pair"), gen_comb(3), gen_counter(2)}) {
      auto sets = compute_sets(tiles, caps(8));
      for (const auto& s : sets.dt) CHECK(sets.dp->contains(s));
      for (const auto& s : sets.ps) CHECK(sets.pp->contains(s));
      if (sets.pp_saturated) {
        for (const auto& e : sets.dp->entries()) CHECK(sets.pp->contains(e.supertile));
      }
      for (const auto& e : sets.dp->entries()) {
        if (sets.pp->contains(e.supertile)) CHECK(sets.in_ps(e.supertile));
      }
    }
  }

  TEST_CASE("larger caps never turn a failure into a pass") {
    auto tiles = gen_demo("error_prone");
    auto small = fuzzy_check(tiles, caps(8));
    auto large = fuzzy_check(tiles, caps(24));
    REQUIRE(small.verdict == Verdict::Fail);
    CHECK(large.verdict == Verdict::Fail);
    CHECK(large.violations.size() >= small.violations.size());
  }

  TEST_CASE("unsaturated runs are inconclusive, not pass") {
    auto r = fuzzy_check(gen_comb(3), caps(4));
    CHECK(r.sets.dp_saturated);
    CHECK_FALSE(r.sets.pp_saturated);
    CHECK(r.violations.empty());
    CHECK(r.verdict == Verdict::Inconclusive);
  }

  TEST_CASE("shape condition") {
    auto tiles = gen_demo("all_strength2");
    CHECK(fuzzy_check(tiles, caps(), fx::rect(2, 1)).verdict == Verdict::Pass);
    auto wrong = fuzzy_check(tiles, caps(), fx::rect(1, 1));
    CHECK(wrong.verdict == Verdict::Fail);
    REQUIRE(wrong.violations.size() == 1);
    CHECK(wrong.violations[0].kind == ViolationKind::Shape);
  }

  TEST_CASE("report format") {
    auto tiles = gen_demo("error_prone");
    auto text = format_report(fuzzy_check(tiles, caps()), tiles);
    CHECK(text.starts_with("verdict: fail\ndp: "));
    CHECK(text.find("\npp: ") != std::string::npos);
    CHECK(text.find("\nps: ") != std::string::npos);
    CHECK(text.find("\ndt: ") != std::string::npos);
    CHECK(text.find("\nviolation 1 growth steps=") != std::string::npos);
    CHECK(text.find("origin:\n") != std::string::npos);
    CHECK(text.find("bad_terminal:\n") != std::string::npos);
  }
}
