#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tam/supertile.hpp"
#include "tam/tile.hpp"

namespace tam {

struct Attachment {
  std::vector<Offset> offsets;  // every offset of the second operand giving `result`
  Supertile result;
  std::uint64_t interface = 0;  // interface strength at offsets.front()
};

// Exposed glue-bearing sides of a supertile, indexed for offset generation.
class SideProfile {
 public:
  SideProfile(const Supertile& s, const TileSet& tiles);

  struct Side {
    Point pos;
    std::uint32_t glue = 0;
  };

  const Supertile& supertile() const { return *supertile_; }
  std::span<const Side> sides(Direction d) const { return sides_[index_of(d)]; }

  // True if some exposed side of `a` facing `d` shares a glue with some
  // exposed side of `b` facing the opposite way, in any direction.
  static bool may_bind(const SideProfile& a, const SideProfile& b);

 private:
  const Supertile* supertile_;
  std::array<std::vector<Side>, 4> sides_;
  std::array<std::vector<std::uint64_t>, 4> glue_bits_;
};

// Candidate offsets of `b` (relative to the canonical frame of `a`) that place
// at least one matched bond, sorted and unique.
std::vector<Offset> candidate_offsets(const SideProfile& a, const SideProfile& b);

// Strength across the interface if `b + offset` is disjoint from `a`;
// nullopt on overlap.
std::optional<std::uint64_t> placed_interface(const Supertile& a, const Supertile& b, Offset offset,
                                              const TileSet& tiles);

// Calls `visit(offset, interface)` for every offset at which `b` attaches
// stably to `a`, in increasing offset order.
void for_each_attachment(const SideProfile& a, const SideProfile& b, const TileSet& tiles,
                         Temperature tau,
                         const std::function<void(Offset, std::uint64_t)>& visit);

// True if `b` attaches stably to `a` at some offset.
bool attaches(const SideProfile& a, const SideProfile& b, const TileSet& tiles, Temperature tau);

Supertile attach(const Supertile& a, const Supertile& b, Offset offset);

// The combination set of two stable supertiles: one entry per distinct
// resulting supertile, sorted by key.
std::vector<Attachment> combinations(const Supertile& a, const Supertile& b, const TileSet& tiles,
                                     Temperature tau);

}  // namespace tam
