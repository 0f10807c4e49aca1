#include "tam/combine.hpp"

#include <algorithm>
#include <map>

namespace tam {
namespace {

std::optional<TileIndex> lookup(const Supertile& s, std::int64_t x, std::int64_t y) {
  if (x < 0 || y < 0 || x >= s.width() || y >= s.height()) return std::nullopt;
  return s.at(static_cast<Coord>(x), static_cast<Coord>(y));
}

}  // namespace

SideProfile::SideProfile(const Supertile& s, const TileSet& tiles) : supertile_(&s) {
  const auto words = (tiles.glue_count() + 63) / 64;
  for (auto& bits : glue_bits_) bits.assign(words, 0);

  for (const auto& p : s.assembly().placements()) {
    for (auto d : kDirections) {
      auto glue = tiles.glue_id(p.tile, d);
      if (glue == 0) continue;
      auto u = unit(d);
      if (lookup(s, std::int64_t{p.pos.x} + u.dx, std::int64_t{p.pos.y} + u.dy)) continue;
      sides_[index_of(d)].push_back({p.pos, glue});
      glue_bits_[index_of(d)][glue / 64] |= std::uint64_t{1} << (glue % 64);
    }
  }
  for (auto& list : sides_) {
    std::stable_sort(list.begin(), list.end(),
                     [](const Side& a, const Side& b) { return a.glue < b.glue; });
  }
}

bool SideProfile::may_bind(const SideProfile& a, const SideProfile& b) {
  for (auto d : kDirections) {
    const auto& x = a.glue_bits_[index_of(d)];
    const auto& y = b.glue_bits_[index_of(opposite(d))];
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] & y[i]) return true;
    }
  }
  return false;
}

std::vector<Offset> candidate_offsets(const SideProfile& a, const SideProfile& b) {
  std::vector<Offset> out;
  for (auto d : kDirections) {
    auto mine = a.sides(d);
    auto theirs = b.sides(opposite(d));
    if (mine.empty() || theirs.empty()) continue;
    auto u = unit(d);
    for (const auto& side : mine) {
      auto [lo, hi] = std::equal_range(
          theirs.begin(), theirs.end(), SideProfile::Side{{}, side.glue},
          [](const SideProfile::Side& l, const SideProfile::Side& r) { return l.glue < r.glue; });
      for (auto it = lo; it != hi; ++it) {
        out.push_back({side.pos.x + u.dx - it->pos.x, side.pos.y + u.dy - it->pos.y});
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::uint64_t> placed_interface(const Supertile& a, const Supertile& b, Offset offset,
                                              const TileSet& tiles) {
  std::uint64_t total = 0;
  for (const auto& p : b.assembly().placements()) {
    std::int64_t x = std::int64_t{p.pos.x} + offset.dx;
    std::int64_t y = std::int64_t{p.pos.y} + offset.dy;
    if (lookup(a, x, y)) return std::nullopt;
    for (auto d : kDirections) {
      auto u = unit(d);
      if (auto t = lookup(a, x + u.dx, y + u.dy)) total += tiles.bond(p.tile, d, *t);
    }
  }
  return total;
}

void for_each_attachment(const SideProfile& a, const SideProfile& b, const TileSet& tiles,
                         Temperature tau,
                         const std::function<void(Offset, std::uint64_t)>& visit) {
  if (!SideProfile::may_bind(a, b)) return;
  const auto need = static_cast<std::uint64_t>(tau.value());
  for (auto offset : candidate_offsets(a, b)) {
    auto strength = placed_interface(a.supertile(), b.supertile(), offset, tiles);
    if (strength && *strength >= need) visit(offset, *strength);
  }
}

bool attaches(const SideProfile& a, const SideProfile& b, const TileSet& tiles, Temperature tau) {
  if (!SideProfile::may_bind(a, b)) return false;
  const auto need = static_cast<std::uint64_t>(tau.value());
  for (auto offset : candidate_offsets(a, b)) {
    auto strength = placed_interface(a.supertile(), b.supertile(), offset, tiles);
    if (strength && *strength >= need) return true;
  }
  return false;
}

Supertile attach(const Supertile& a, const Supertile& b, Offset offset) {
  return Supertile(union_disjoint(a.assembly(), translate(b.assembly(), offset)));
}

std::vector<Attachment> combinations(const Supertile& a, const Supertile& b, const TileSet& tiles,
                                     Temperature tau) {
  SideProfile pa(a, tiles);
  SideProfile pb(b, tiles);
  std::map<std::string, Attachment> found;
  for_each_attachment(pa, pb, tiles, tau, [&](Offset offset, std::uint64_t strength) {
    auto result = attach(a, b, offset);
    auto it = found.find(result.key());
    if (it == found.end()) {
      auto key = result.key();
      found.emplace(std::move(key), Attachment{{offset}, std::move(result), strength});
    } else {
      it->second.offsets.push_back(offset);
    }
  });
  std::vector<Attachment> out;
  out.reserve(found.size());
  for (auto& [key, attachment] : found) out.push_back(std::move(attachment));
  return out;
}

}  // namespace tam
