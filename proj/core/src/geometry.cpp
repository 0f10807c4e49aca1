#include "tam/geometry.hpp"

#include <limits>

#include "tam/error.hpp"

namespace tam {
namespace {

Coord checked_add(Coord a, Coord b) {
  Coord out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("coordinate overflow: " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

Coord checked_sub(Coord a, Coord b) {
  Coord out = 0;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw OverflowError("coordinate overflow: " + std::to_string(a) + " - " + std::to_string(b));
  }
  return out;
}

}  // namespace

const char* to_string(Direction d) {
  switch (d) {
    case Direction::North: return "north";
    case Direction::East: return "east";
    case Direction::South: return "south";
    case Direction::West: return "west";
  }
  return "?";
}

Point shifted(Point p, Offset u) { return {checked_add(p.x, u.dx), checked_add(p.y, u.dy)}; }

Offset negated(Offset u) { return {checked_sub(0, u.dx), checked_sub(0, u.dy)}; }

Offset plus(Offset a, Offset b) { return {checked_add(a.dx, b.dx), checked_add(a.dy, b.dy)}; }

Offset difference(Point to, Point from) {
  return {checked_sub(to.x, from.x), checked_sub(to.y, from.y)};
}

std::string to_string(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string to_string(Offset u) {
  return "(" + std::to_string(u.dx) + "," + std::to_string(u.dy) + ")";
}

}  // namespace tam
