#pragma once

#include <string>
#include <vector>

#include "tam/assembly.hpp"
#include "tam/tile.hpp"

namespace fx {

inline tam::TileType tile(std::string name, tam::Glue n = {}, tam::Glue e = {}, tam::Glue s = {}, tam::Glue w = {}) {
  return tam::TileType{std::move(name), {std::move(n), std::move(e), std::move(s), std::move(w)}};
}

// A with east (g, s), B with west (g, s).
inline tam::TileSet pair_ab(tam::Strength s) {
  return tam::TileSet({tile("A", {}, {"g", s}), tile("B", {}, {}, {}, {"g", s})});
}

inline tam::Assembly at(std::vector<tam::Placement> ps) { return tam::Assembly(std::move(ps)); }

inline std::vector<tam::Point> rect(int w, int h) {
  std::vector<tam::Point> out;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) out.push_back({x, y});
  }
  return out;
}

inline std::vector<tam::Point> domain(const tam::Assembly& a) {
  std::vector<tam::Point> out;
  for (const auto& p : a.placements()) out.push_back(p.pos);
  return out;
}

}  // namespace fx
