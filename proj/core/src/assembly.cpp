#include "tam/assembly.hpp"

#include <algorithm>

namespace tam {
namespace {

BoundingBox bounds_of(const std::vector<Placement>& sorted) {
  BoundingBox box{sorted.front().pos, sorted.front().pos};
  for (const auto& p : sorted) {
    box.min.x = std::min(box.min.x, p.pos.x);
    box.max.x = std::max(box.max.x, p.pos.x);
  }
  box.min.y = sorted.front().pos.y;
  box.max.y = sorted.back().pos.y;
  return box;
}

bool by_position(const Placement& a, const Placement& b) { return a.pos < b.pos; }

}  // namespace

OverlapError::OverlapError(Point p) : Error("overlap at " + to_string(p)), point_(p) {}

Assembly::Assembly(std::vector<Placement> placements) : placements_(std::move(placements)) {
  if (placements_.empty()) throw Error("empty assembly");
  std::sort(placements_.begin(), placements_.end(), by_position);
  auto dup = std::adjacent_find(placements_.begin(), placements_.end(),
                                [](const Placement& a, const Placement& b) { return a.pos == b.pos; });
  if (dup != placements_.end()) throw Error("duplicate coordinate " + to_string(dup->pos));
  bounds_ = bounds_of(placements_);
}

Assembly::Assembly(Unchecked, std::vector<Placement> sorted)
    : placements_(std::move(sorted)), bounds_(bounds_of(placements_)) {}

std::optional<TileIndex> Assembly::at(Point p) const {
  auto it = std::lower_bound(placements_.begin(), placements_.end(), Placement{p, 0}, by_position);
  if (it == placements_.end() || it->pos != p) return std::nullopt;
  return it->tile;
}

void validate(const Assembly& a, const TileSet& tiles) {
  for (const auto& p : a.placements()) {
    if (p.tile >= tiles.size()) {
      throw Error("tile index " + std::to_string(p.tile) + " at " + to_string(p.pos) +
                  " is not in the tile set");
    }
  }
}

Assembly translate(const Assembly& a, Offset u) {
  std::vector<Placement> moved;
  moved.reserve(a.size());
  for (const auto& p : a.placements()) moved.push_back({shifted(p.pos, u), p.tile});
  // A uniform shift preserves row-major order.
  return Assembly(Assembly::Unchecked{}, std::move(moved));
}

Canonical canonicalize(const Assembly& a) {
  const auto& box = a.bounds();
  Offset u = negated(Offset{box.min.x, box.min.y});
  return {translate(a, u), u};
}

Assembly union_disjoint(const Assembly& a, const Assembly& b) {
  std::vector<Placement> merged;
  merged.reserve(a.size() + b.size());
  auto pa = a.placements();
  auto pb = b.placements();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < pa.size() && j < pb.size()) {
    if (pa[i].pos == pb[j].pos) throw OverlapError(pa[i].pos);
    if (by_position(pa[i], pb[j])) {
      merged.push_back(pa[i++]);
    } else {
      merged.push_back(pb[j++]);
    }
  }
  merged.insert(merged.end(), pa.begin() + static_cast<std::ptrdiff_t>(i), pa.end());
  merged.insert(merged.end(), pb.begin() + static_cast<std::ptrdiff_t>(j), pb.end());
  return Assembly(Assembly::Unchecked{}, std::move(merged));
}

}  // namespace tam
