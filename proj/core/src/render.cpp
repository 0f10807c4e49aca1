#include "tam/render.hpp"

#include <sstream>

#include "tam/error.hpp"
#include "tam/stability.hpp"

namespace tam {
namespace {

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Deterministic pastel fill per tile type.
std::string fill_for(TileIndex t) {
  static constexpr const char* kPalette[] = {"#cfe3f7", "#f7dfcf", "#d8f0d0", "#efd6f2",
                                             "#f4efc4", "#d3efef", "#f1d0d8", "#e0e0e0"};
  return kPalette[t % std::size(kPalette)];
}

}  // namespace

std::string render_svg(const Assembly& a, const TileSet& tiles, const RenderOptions& options) {
  if (options.cell_size < 8) throw Error("cell size must be at least 8 pixels");
  const auto cell = static_cast<std::int64_t>(options.cell_size);
  const auto margin = cell / 2;
  const auto& box = a.bounds();
  const std::int64_t width = std::int64_t{box.width()} * cell + 2 * margin;
  const std::int64_t height = std::int64_t{box.height()} * cell + 2 * margin;

  // Top-left pixel of the cell at lattice point p; +y points up.
  auto left = [&](Point p) { return margin + (std::int64_t{p.x} - box.min.x) * cell; };
  auto top = [&](Point p) { return margin + (std::int64_t{box.max.y} - p.y) * cell; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";

  for (const auto& p : a.placements()) {
    const auto& type = tiles[p.tile];
    svg << "<rect class=\"tile\" x=\"" << left(p.pos) << "\" y=\"" << top(p.pos) << "\" width=\"" << cell
        << "\" height=\"" << cell << "\" fill=\"" << fill_for(p.tile)
        << "\" stroke=\"#555\" stroke-width=\"1\"><title>" << escape(type.name) << ' '
        << to_string(p.pos) << "</title></rect>\n";
    if (options.show_labels) {
      const auto cx = left(p.pos) + cell / 2;
      const auto cy = top(p.pos) + cell / 2;
      const auto font = std::max<std::int64_t>(4, cell / 5);
      svg << "<text class=\"name\" x=\"" << cx << "\" y=\"" << cy + font / 2 << "\" font-size=\"" << font
          << "\" text-anchor=\"middle\">" << escape(type.name) << "</text>\n";
      for (auto d : kDirections) {
        const auto& g = type.glue(d);
        if (g.label.empty()) continue;
        auto u = unit(d);
        const auto gx = cx + u.dx * (cell * 3 / 8);
        const auto gy = cy - u.dy * (cell * 3 / 8) + font / 2;
        svg << "<text class=\"glue\" x=\"" << gx << "\" y=\"" << gy << "\" font-size=\"" << font
            << "\" text-anchor=\"middle\">" << escape(g.label) << "</text>\n";
      }
    }
  }

  // Bonds and mismatches, each abutting pair visited once.
  auto ps = a.placements();
  for (const auto& p : ps) {
    for (auto d : {Direction::East, Direction::North}) {
      auto q = shifted(p.pos, unit(d));
      auto other = a.at(q);
      if (!other) continue;
      const auto strength = tiles.bond(p.tile, d, *other);
      const bool vertical_edge = d == Direction::East;
      // Shared edge: from (x0,y0) along the edge direction.
      const auto x0 = vertical_edge ? left(q) : left(p.pos);
      const auto y0 = vertical_edge ? top(p.pos) : top(p.pos);
      if (strength > 0 && options.show_ticks) {
        for (Strength k = 0; k < strength; ++k) {
          const auto along = cell * (k + 1) / (strength + 1);
          const auto len = cell / 6;
          if (vertical_edge) {
            svg << "<line class=\"tick\" x1=\"" << x0 - len << "\" y1=\"" << y0 + along << "\" x2=\"" << x0 + len
                << "\" y2=\"" << y0 + along << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
          } else {
            svg << "<line class=\"tick\" x1=\"" << x0 + along << "\" y1=\"" << y0 - len << "\" x2=\""
                << x0 + along << "\" y2=\"" << y0 + len << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
          }
        }
      }
      const auto& mine = tiles[p.tile].glue(d);
      const auto& theirs = tiles[*other].glue(opposite(d));
      if (strength == 0 && !mine.is_null() && !theirs.is_null()) {
        const auto mx = vertical_edge ? x0 : x0 + cell / 2;
        const auto my = vertical_edge ? y0 + cell / 2 : y0;
        svg << "<circle class=\"mismatch\" cx=\"" << mx << "\" cy=\"" << my << "\" r=\"" << cell / 8
            << "\" fill=\"#d62728\"/>\n";
      }
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace tam
