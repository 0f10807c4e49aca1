#pragma once

#include <string>

#include "tam/assembly.hpp"
#include "tam/tile.hpp"

namespace tam {

struct RenderOptions {
  int cell_size = 24;  // pixels, at least 8
  bool show_labels = false;
  bool show_ticks = false;  // one tick per unit of bond strength
};

// SVG 1.1 drawing with +y up. One <rect class="tile"> per tile; abutting
// sides whose glues fail to bind get a <circle class="mismatch">.
std::string render_svg(const Assembly& a, const TileSet& tiles, const RenderOptions& options = {});

}  // namespace tam
