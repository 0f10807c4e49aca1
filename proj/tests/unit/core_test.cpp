#include <climits>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "tam/assembly.hpp"
#include "tam/supertile.hpp"

using namespace tam;

TEST_SUITE("core") {
  TEST_CASE("translate shifts every placement") {
    auto one = fx::at({{{0, 0}, 0}});
    CHECK(translate(one, {3, -2}).placements()[0].pos == Point{3, -2});

    auto two = fx::at({{{5, 7}, 0}, {{6, 7}, 1}});
    CHECK(translate(two, {0, 0}) == two);
    auto moved = translate(two, {-5, -7});
    CHECK(fx::domain(moved) == std::vector<Point>{{0, 0}, {1, 0}});
  }

  TEST_CASE("canonicalize moves the min corner to the origin") {
    auto two = fx::at({{{5, 7}, 0}, {{6, 7}, 1}});
    auto c = canonicalize(two);
    CHECK(fx::domain(c.assembly) == std::vector<Point>{{0, 0}, {1, 0}});
    CHECK(c.offset == Offset{-5, -7});

    auto again = canonicalize(c.assembly);
    CHECK(again.assembly == c.assembly);
    CHECK(again.offset == Offset{0, 0});

    auto shifted_copy = canonicalize(translate(two, {4, 1}));
    CHECK(shifted_copy.assembly == c.assembly);
    CHECK(shifted_copy.offset == Offset{-9, -8});
  }

  TEST_CASE("min corner takes x and y minima separately") {
    auto diag = fx::at({{{2, 0}, 0}, {{0, 3}, 0}});
    CHECK(fx::domain(canonicalize(diag).assembly) == std::vector<Point>{{2, 0}, {0, 3}});
  }

  TEST_CASE("union of disjoint assemblies") {
    auto u = union_disjoint(fx::at({{{0, 0}, 0}}), fx::at({{{1, 0}, 1}}));
    CHECK(fx::domain(u) == std::vector<Point>{{0, 0}, {1, 0}});
    CHECK_THROWS_WITH_AS(union_disjoint(fx::at({{{0, 0}, 0}}), fx::at({{{0, 0}, 1}})), "overlap at (0,0)",
                         OverlapError);

    auto three = fx::at({{{0, 0}, 0}, {{1, 0}, 0}, {{2, 0}, 0}});
    auto four = fx::at({{{0, 1}, 0}, {{1, 1}, 0}, {{2, 1}, 0}, {{3, 1}, 0}});
    CHECK(union_disjoint(three, four).size() == 7);
  }

  TEST_CASE("assemblies reject empty and duplicate input") {
    CHECK_THROWS_AS(Assembly({}), Error);
    CHECK_THROWS_WITH(Assembly({{{1, 2}, 0}, {{1, 2}, 1}}), "duplicate coordinate (1,2)");
  }

  TEST_CASE("placements are stored row-major") {
    auto a = fx::at({{{1, 1}, 0}, {{5, 0}, 0}, {{0, 1}, 0}});
    CHECK(fx::domain(a) == std::vector<Point>{{5, 0}, {0, 1}, {1, 1}});
    CHECK(a.bounds().width() == 6);
    CHECK(a.bounds().height() == 2);
  }

  TEST_CASE("coordinate overflow is reported") {
    auto edge = fx::at({{{INT32_MAX, 0}, 0}});
    CHECK_THROWS_AS(translate(edge, {1, 0}), OverflowError);
    CHECK_THROWS_AS(negated(Offset{INT32_MIN, 0}), OverflowError);
    CHECK_NOTHROW(translate(edge, {-1, 0}));
  }

  TEST_CASE("validate checks tile indices") {
    auto tiles = fx::pair_ab(2);
    CHECK_NOTHROW(validate(fx::at({{{0, 0}, 1}}), tiles));
    CHECK_THROWS_AS(validate(fx::at({{{0, 0}, 2}}), tiles), Error);
  }

  TEST_CASE("supertile identity is the translation class") {
    oracle::Random rnd(7);
    auto tiles = rnd.tile_set(4, 3, 2);
    for (int i = 0; i < 300; ++i) {
      auto a = rnd.assembly(tiles, 8, 2);
      auto u = rnd.offset(50);
      Supertile s(a), t(translate(a, u));
      CHECK(s == t);
      CHECK(s.key() == t.key());
      CHECK(s.size() == a.size());
      CHECK(canonicalize(canonicalize(a).assembly).assembly == canonicalize(a).assembly);
    }
  }

  TEST_CASE("supertile grid lookup matches the assembly") {
    auto a = fx::at({{{3, 3}, 1}, {{4, 3}, 0}, {{3, 5}, 1}});
    Supertile s(a);
    CHECK(s.width() == 2);
    CHECK(s.height() == 3);
    CHECK(s.at(0, 0) == TileIndex{1});
    CHECK(s.at(1, 0) == TileIndex{0});
    CHECK_FALSE(s.at(1, 2).has_value());
    CHECK_FALSE(s.at(-1, 0).has_value());
    CHECK(s.key() == "0,0,1;1,0,0;0,2,1");
  }

  TEST_CASE("sparse supertiles fall back to the assembly") {
    auto far = fx::at({{{0, 0}, 0}, {{5000, 5000}, 1}});
    Supertile s(far);
    CHECK(s.at(5000, 5000) == TileIndex{1});
    CHECK_FALSE(s.at(1, 1).has_value());
  }

  TEST_CASE("tile sets") {
    CHECK_THROWS_WITH(TileSet({}), "tile set is empty");
    CHECK_THROWS_WITH(TileSet({fx::tile("A"), fx::tile("A")}), "duplicate tile name A");
    CHECK_THROWS_AS(TileSet({fx::tile("A", {"", 1})}), Error);
    CHECK_THROWS_AS(Temperature(0), Error);
    CHECK(Temperature().value() == 2);

    auto tiles = fx::pair_ab(2);
    CHECK(tiles.find("B") == TileIndex{1});
    CHECK_FALSE(tiles.find("C").has_value());
    CHECK(tiles.bond(0, Direction::East, 1) == 2);
    CHECK(tiles.bond(1, Direction::West, 0) == 2);
    CHECK(tiles.bond(1, Direction::East, 0) == 0);
  }

  TEST_CASE("glues never bind under rotation") {
    // Same label on north of A and west of B: they abut only if rotated.
    TileSet tiles({fx::tile("A", {"g", 2}), fx::tile("B", {}, {}, {}, {"g", 2})});
    CHECK(tiles.bond(0, Direction::East, 1) == 0);
    CHECK(tiles.bond(0, Direction::North, 1) == 0);
    // Differing strengths with the same label do not bind either.
    TileSet mixed({fx::tile("A", {}, {"g", 1}), fx::tile("B", {}, {}, {}, {"g", 2})});
    CHECK(mixed.bond(0, Direction::East, 1) == 0);
  }
}
