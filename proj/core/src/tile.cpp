#include "tam/tile.hpp"

#include <map>

#include "tam/error.hpp"

namespace tam {

TileSet::TileSet(std::vector<TileType> tiles) : tiles_(std::move(tiles)) {
  if (tiles_.empty()) throw Error("tile set is empty");

  std::map<std::pair<std::string, Strength>, std::uint32_t> interned;
  glue_strengths_.push_back(0);
  glue_ids_.reserve(tiles_.size() * 4);

  for (TileIndex i = 0; i < tiles_.size(); ++i) {
    const auto& t = tiles_[i];
    if (t.name.empty()) throw Error("tile type without a name");
    if (!by_name_.emplace(t.name, i).second) throw Error("duplicate tile name " + t.name);
    for (auto d : kDirections) {
      const auto& g = t.glue(d);
      if (g.strength == 0) {
        glue_ids_.push_back(0);
        continue;
      }
      if (g.label.empty()) {
        throw Error("tile " + t.name + ": " + to_string(d) + " glue has strength but no label");
      }
      auto [it, inserted] =
          interned.emplace(std::pair{g.label, g.strength}, static_cast<std::uint32_t>(glue_strengths_.size()));
      if (inserted) glue_strengths_.push_back(g.strength);
      glue_ids_.push_back(it->second);
    }
  }
}

std::optional<TileIndex> TileSet::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

Temperature::Temperature(int value) : value_(value) {
  if (value < 1) throw Error("temperature must be at least 1, got " + std::to_string(value));
}

}  // namespace tam
