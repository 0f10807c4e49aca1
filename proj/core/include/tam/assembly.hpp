#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tam/error.hpp"
#include "tam/geometry.hpp"
#include "tam/tile.hpp"

namespace tam {

struct Placement {
  Point pos;
  TileIndex tile = 0;

  friend bool operator==(const Placement&, const Placement&) = default;
};

class OverlapError : public Error {
 public:
  explicit OverlapError(Point p);
  Point point() const { return point_; }

 private:
  Point point_;
};

struct BoundingBox {
  Point min;
  Point max;

  Coord width() const { return max.x - min.x + 1; }
  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
  Coord height() const { return max.y - min.y + 1; }
};

// A finite, nonempty placement of tile indices on the lattice. Placements are
// kept sorted by (y, x); duplicates are rejected on construction.
class Assembly {
 public:
  explicit Assembly(std::vector<Placement> placements);

  std::span<const Placement> placements() const { return placements_; }
  std::size_t size() const { return placements_.size(); }
  std::optional<TileIndex> at(Point p) const;
  bool contains(Point p) const { return at(p).has_value(); }
  const BoundingBox& bounds() const { return bounds_; }

  friend bool operator==(const Assembly&, const Assembly&) = default;

 private:
  struct Unchecked {};
  Assembly(Unchecked, std::vector<Placement> sorted);

  friend Assembly translate(const Assembly&, Offset);
  friend Assembly union_disjoint(const Assembly&, const Assembly&);

  std::vector<Placement> placements_;
  BoundingBox bounds_{};
};

// Throws Error unless every tile index is valid for `tiles`.
void validate(const Assembly& a, const TileSet& tiles);

Assembly translate(const Assembly& a, Offset u);

struct Canonical {
  Assembly assembly;
  Offset offset;  // canonical == translate(original, offset)
};

// Translate so the domain's min x and min y are both zero.
Canonical canonicalize(const Assembly& a);

// Throws OverlapError naming the first shared point in row-major order.
Assembly union_disjoint(const Assembly& a, const Assembly& b);

}  // namespace tam
