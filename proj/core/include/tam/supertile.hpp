#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tam/assembly.hpp"

namespace tam {

// Translation class of an assembly, held as its min-corner representative.
// The identity key serializes the canonical placements in row-major order.
class Supertile {
 public:
  explicit Supertile(const Assembly& a);

  const Assembly& assembly() const { return canonical_; }
  std::size_t size() const { return canonical_.size(); }
  Coord width() const { return width_; }
  Coord height() const { return height_; }
  const std::string& key() const { return key_; }

  // Dense lookup in canonical coordinates.
  std::optional<TileIndex> at(Coord x, Coord y) const {
    if (x < 0 || y < 0 || x >= width_ || y >= height_) return std::nullopt;
    if (grid_.empty()) return canonical_.at({x, y});
    auto v = grid_[static_cast<std::size_t>(y) * width_ + x];
    if (v < 0) return std::nullopt;
    return static_cast<TileIndex>(v);
  }

  // Per-temperature stability memo; see is_stable(const Supertile&, ...).
  std::optional<bool> cached_stability(int tau) const;
  void cache_stability(int tau, bool stable) const;

  friend bool operator==(const Supertile& a, const Supertile& b) { return a.key_ == b.key_; }
  friend bool operator<(const Supertile& a, const Supertile& b) { return a.key_ < b.key_; }

 private:
  struct StabilityCache;

  Assembly canonical_;
  Coord width_ = 0;
  Coord height_ = 0;
  std::string key_;
  std::vector<std::int32_t> grid_;  // empty for very sparse supertiles
  std::shared_ptr<StabilityCache> stability_;
};

// Orders supertiles by tile count, then key.
struct SmallerFirst {
  bool operator()(const Supertile& a, const Supertile& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.key() < b.key();
  }
};

}  // namespace tam
