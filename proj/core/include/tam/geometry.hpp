#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace tam {

using Coord = std::int32_t;

enum class Direction : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };

inline constexpr std::array<Direction, 4> kDirections{Direction::North, Direction::East,
                                                      Direction::South, Direction::West};

constexpr Direction opposite(Direction d) {
  return static_cast<Direction>((static_cast<std::uint8_t>(d) + 2) % 4);
}

constexpr std::size_t index_of(Direction d) { return static_cast<std::size_t>(d); }

const char* to_string(Direction d);

struct Offset {
  Coord dx = 0;
  Coord dy = 0;

  friend constexpr auto operator<=>(const Offset&, const Offset&) = default;
};

// Lattice point. Ordered row-major: y first, then x.
struct Point {
  Coord x = 0;
  Coord y = 0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
  friend constexpr std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

constexpr Offset unit(Direction d) {
  switch (d) {
    case Direction::North: return {0, 1};
    case Direction::East: return {1, 0};
    case Direction::South: return {0, -1};
    case Direction::West: return {-1, 0};
  }
  return {};
}

// Throws OverflowError instead of wrapping.
Point shifted(Point p, Offset u);
Offset negated(Offset u);
Offset plus(Offset a, Offset b);
Offset difference(Point to, Point from);

std::string to_string(Point p);
std::string to_string(Offset u);

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    auto packed = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) << 32) |
                  static_cast<std::uint32_t>(p.y);
    return std::hash<std::uint64_t>{}(packed);
  }
};

}  // namespace tam
