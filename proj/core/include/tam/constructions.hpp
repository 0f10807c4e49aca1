#pragma once

#include <string_view>
#include <utility>

#include "tam/tile.hpp"

namespace tam {

// Non-cooperative comb: n backbone tiles hard-code the bottom row and n - 1
// row-indexed tooth tiles, shared by every column, grow the columns. At
// temperature 1 it assembles exactly the n x n square with 2n - 1 types.
TileSet gen_comb(int n);

// Zig-zag binary counter of the given bit width, counting 0 .. 2^width - 1 at
// temperature 2. Rows alternate between increment rows (grown right to left)
// and copy rows (grown left to right); the overflowing increment row halts.
// Terminal: width x 2^(width + 1). Tile types: width + 16, or 12 at width 2
// where the middle-column types never occur.
TileSet gen_counter(int width);

inline constexpr int kCounterMinWidth = 2;
std::pair<int, int> counter_dimensions(int width);  // (width, height)
std::size_t counter_tile_count(int width);

// n x n square at temperature 2: an L-shaped frame of two zig-zag counters
// (a vertical one w bits wide and n tall, a horizontal one w bits tall and
// n - w long) sharing a corner seed, filled by one cooperative filler tile.
// w is the least width >= 2 with 2^w + 1 >= n, so both counts stay in the
// upper half of their range and the set of visited types only grows with n.
// Generic types the counts never visit are dropped; at most 2w + 33 types.
TileSet gen_fuzzy_square(int n);

inline constexpr int kSquareMinN = 4;
int square_counter_width(int n);
// Upper bound c * ceil(log2 n) + d on the tile-type count.
inline constexpr std::size_t kSquareTileSlope = 2;
inline constexpr std::size_t kSquareTileIntercept = 33;
std::size_t square_tile_bound(int n);

// Verifier fixtures: "all_strength2", "strength1_pair", "error_prone".
TileSet gen_demo(std::string_view id);

}  // namespace tam
