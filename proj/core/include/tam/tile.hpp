#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tam/geometry.hpp"

namespace tam {

using TileIndex = std::uint32_t;
using Strength = std::uint32_t;

struct Glue {
  std::string label;
  Strength strength = 0;

  bool is_null() const { return strength == 0; }
  friend bool operator==(const Glue&, const Glue&) = default;
};

// Abutting glues bind iff label and strength agree and the strength is positive.
inline bool binds(const Glue& a, const Glue& b) {
  return a.strength > 0 && a.strength == b.strength && a.label == b.label;
}

struct TileType {
  std::string name;
  std::array<Glue, 4> glues{};

  const Glue& glue(Direction d) const { return glues[index_of(d)]; }
  Glue& glue(Direction d) { return glues[index_of(d)]; }
  friend bool operator==(const TileType&, const TileType&) = default;
};

// An ordered, nonempty collection of uniquely named tile types. Glues are
// interned so the hot paths compare integers instead of strings.
class TileSet {
 public:
  explicit TileSet(std::vector<TileType> tiles);

  std::size_t size() const { return tiles_.size(); }
  const TileType& operator[](TileIndex i) const { return tiles_.at(i); }
  std::span<const TileType> tiles() const { return tiles_; }
  std::optional<TileIndex> find(const std::string& name) const;

  // Interned id of a side; 0 for sides that can never bind.
  std::uint32_t glue_id(TileIndex t, Direction d) const { return glue_ids_[t * 4 + index_of(d)]; }
  std::size_t glue_count() const { return glue_strengths_.size(); }
  Strength glue_strength(std::uint32_t id) const { return glue_strengths_[id]; }

  // Strength of the bond between tile `a` and tile `b` placed one step in
  // direction `d` from it. Zero when the abutting glues do not bind.
  Strength bond(TileIndex a, Direction d, TileIndex b) const {
    auto ga = glue_id(a, d);
    return ga != 0 && ga == glue_id(b, opposite(d)) ? glue_strengths_[ga] : 0;
  }

  friend bool operator==(const TileSet& a, const TileSet& b) { return a.tiles_ == b.tiles_; }

 private:
  std::vector<TileType> tiles_;
  std::unordered_map<std::string, TileIndex> by_name_;
  std::vector<std::uint32_t> glue_ids_;
  std::vector<Strength> glue_strengths_;  // index 0 is the null glue
};

// Temperature; always at least 1.
class Temperature {
 public:
  constexpr Temperature() = default;
  explicit Temperature(int value);

  constexpr int value() const { return value_; }
  friend constexpr auto operator<=>(const Temperature&, const Temperature&) = default;

 private:
  int value_ = 2;
};

}  // namespace tam
