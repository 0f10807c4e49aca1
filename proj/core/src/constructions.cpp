#include "tam/constructions.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <tuple>

#include "tam/error.hpp"

namespace tam {
namespace {

using std::to_string;

Glue glue(std::string label, Strength strength) { return Glue{std::move(label), strength}; }

TileType tile(std::string name, Glue north, Glue east, Glue south, Glue west) {
  return TileType{std::move(name), {std::move(north), std::move(east), std::move(south), std::move(west)}};
}

// Zig-zag counter laid out with bits along x (MSB at x = 0) and growth
// towards +y. Copy rows run MSB -> LSB and hand over to the next increment row
// through a strength-2 turn on the LSB; increment rows run LSB -> MSB and hand
// over through a strength-2 turn on the MSB unless the value overflowed.
struct CounterSpec {
  std::string prefix;
  int width = 2;
  std::uint64_t start = 0;
  bool increment_seed = false;  // seed row plays the role of an increment row
  Glue lsb_east;                // extra glue on the LSB side of generic rows
  Glue msb_west;                // extra glue on the MSB side of generic rows and seed
  Glue seed_lsb_east;
  Glue seed_lsb_south;
};

// Names of the generic tile types placed while counting from the seed value
// to overflow.
std::set<std::string> visited_types(const CounterSpec& c) {
  const auto& p = c.prefix;
  const int w = c.width;
  const std::uint64_t full = std::uint64_t{1} << w;
  auto bit = [&](std::uint64_t v, int x) { return to_string((v >> (w - 1 - x)) & 1u); };
  std::set<std::string> used;
  std::uint64_t value = c.start;
  bool copy_next = c.increment_seed;
  while (true) {
    if (copy_next) {
      used.insert(p + "_copymsb_b" + bit(value, 0));
      for (int x = 1; x < w - 1; ++x) used.insert(p + "_copy_b" + bit(value, x));
      used.insert(p + "_copylsb_b" + bit(value, w - 1));
      copy_next = false;
      continue;
    }
    std::uint64_t carry = 1;
    for (int x = w - 1; x >= 0; --x) {
      const std::string b = bit(value, x);
      if (x == w - 1) {
        used.insert(p + "_inclsb_b" + b);
      } else if (x > 0) {
        used.insert(p + "_inc_b" + b + "_c" + to_string(carry));
      } else {
        used.insert(p + "_incmsb_b" + b + "_c" + to_string(carry));
      }
      carry &= (value >> (w - 1 - x)) & 1u;
    }
    if (value + 1 == full) break;
    ++value;
    copy_next = true;
  }
  return used;
}

std::vector<TileType> counter_tiles(const CounterSpec& c) {
  const auto& p = c.prefix;
  auto bit = [](int b) { return to_string(b); };
  // Glue families, all named after what they carry.
  auto copy_msb = [&](int b) { return glue(p + "_copymsb_bit" + bit(b), 1); };
  auto copy_mid = [&](int b) { return glue(p + "_copy_bit" + bit(b), 1); };
  auto turn_right = [&](int b) { return glue(p + "_turnlsb_bit" + bit(b), 2); };
  auto inc_mid = [&](int b) { return glue(p + "_inc_bit" + bit(b), 1); };
  auto inc_lsb = [&](int b) { return glue(p + "_inclsb_bit" + bit(b), 1); };
  auto turn_left = [&](int b) { return glue(p + "_turnmsb_bit" + bit(b), 2); };
  auto carry = [&](int v) { return glue(p + "_carry" + bit(v), 1); };
  auto go = [&] { return glue(p + "_go", 1); };

  std::vector<TileType> tiles;
  const int w = c.width;
  for (int x = 0; x < w; ++x) {
    const int b = static_cast<int>((c.start >> (w - 1 - x)) & 1u);
    Glue north;
    if (!c.increment_seed) {
      north = x == 0 ? copy_msb(b) : x == w - 1 ? turn_right(b) : copy_mid(b);
    } else {
      north = x == 0 ? turn_left(b) : x == w - 1 ? inc_lsb(b) : inc_mid(b);
    }
    Glue east = x == w - 1 ? c.seed_lsb_east : glue(p + "_seed" + to_string(x), 2);
    Glue west = x == 0 ? c.msb_west : glue(p + "_seed" + to_string(x - 1), 2);
    Glue south = x == w - 1 ? c.seed_lsb_south : Glue{};
    tiles.push_back(tile(p + "_seed" + to_string(x), north, east, south, west));
  }
  for (int b = 0; b < 2; ++b) {
    tiles.push_back(tile(p + "_inclsb_b" + bit(b), inc_lsb(1 - b), c.lsb_east, turn_right(b), carry(b)));
  }
  for (int b = 0; b < 2; ++b) {
    for (int k = 0; k < 2; ++k) {
      tiles.push_back(tile(p + "_inc_b" + bit(b) + "_c" + bit(k), inc_mid(b ^ k), carry(k), copy_mid(b),
                           carry(b & k)));
    }
  }
  for (int b = 0; b < 2; ++b) {
    for (int k = 0; k < 2; ++k) {
      Glue north = (b & k) ? Glue{} : turn_left(b ^ k);
      tiles.push_back(tile(p + "_incmsb_b" + bit(b) + "_c" + bit(k), north, carry(k), copy_msb(b), c.msb_west));
    }
  }
  for (int b = 0; b < 2; ++b) {
    tiles.push_back(tile(p + "_copymsb_b" + bit(b), copy_msb(b), go(), turn_left(b), c.msb_west));
    tiles.push_back(tile(p + "_copy_b" + bit(b), copy_mid(b), go(), inc_mid(b), go()));
    tiles.push_back(tile(p + "_copylsb_b" + bit(b), turn_right(b), c.lsb_east, inc_lsb(b), go()));
  }
  // Keep only the generic types the count actually visits; unused ones would
  // float around as extra terminals.
  const auto used = visited_types(c);
  std::erase_if(tiles, [&](const TileType& t) {
    return !t.name.starts_with(p + "_seed") && !used.contains(t.name);
  });
  return tiles;
}

// Quarter turn clockwise: what faced north now faces east.
TileType rotated_clockwise(const TileType& t) {
  TileType r{t.name, {}};
  r.glue(Direction::East) = t.glue(Direction::North);
  r.glue(Direction::South) = t.glue(Direction::East);
  r.glue(Direction::West) = t.glue(Direction::South);
  r.glue(Direction::North) = t.glue(Direction::West);
  return r;
}

// Seed style and start value for a counter occupying exactly `rows` rows.
std::pair<bool, std::uint64_t> counter_start(int width, int rows) {
  const std::uint64_t full = std::uint64_t{1} << width;
  const bool odd = rows % 2 == 1;
  const std::uint64_t values = static_cast<std::uint64_t>(odd ? (rows - 1) / 2 : rows / 2);
  if (values == 0 || values > full) {
    throw Error("a " + to_string(width) + "-bit counter cannot span " + to_string(rows) + " rows");
  }
  return {odd, full - values};
}

}  // namespace

TileSet gen_comb(int n) {
  if (n < 1) throw Error("comb needs n >= 1, got " + to_string(n));
  std::vector<TileType> tiles;
  for (int col = 0; col < n; ++col) {
    Glue north = n > 1 ? glue("tooth_1", 1) : Glue{};
    Glue east = col + 1 < n ? glue("base_" + to_string(col), 1) : Glue{};
    Glue west = col > 0 ? glue("base_" + to_string(col - 1), 1) : Glue{};
    tiles.push_back(tile("comb_base_" + to_string(col), north, east, {}, west));
  }
  for (int row = 1; row < n; ++row) {
    Glue north = row + 1 < n ? glue("tooth_" + to_string(row + 1), 1) : Glue{};
    tiles.push_back(tile("comb_tooth_" + to_string(row), north, {}, glue("tooth_" + to_string(row), 1), {}));
  }
  return TileSet(std::move(tiles));
}

std::pair<int, int> counter_dimensions(int width) {
  if (width < kCounterMinWidth || width > 30) throw Error("counter width out of range");
  return {width, 1 << (width + 1)};
}

std::size_t counter_tile_count(int width) {
  // Width 2 has no middle column, so the six middle types are never placed.
  return static_cast<std::size_t>(width) + (width == 2 ? 10 : 16);
}

TileSet gen_counter(int width) {
  if (width < kCounterMinWidth) {
    throw Error("counter needs width >= " + to_string(kCounterMinWidth) + ", got " + to_string(width));
  }
  if (width > 30) throw Error("counter width above 30 is not supported");
  CounterSpec spec;
  spec.prefix = "ctr";
  spec.width = width;
  return TileSet(counter_tiles(spec));
}

int square_counter_width(int n) {
  if (n < kSquareMinN) {
    throw Error("square needs n >= " + to_string(kSquareMinN) + ", got " + to_string(n));
  }
  if (n > (1 << 20)) throw Error("square side above 2^20 is not supported");
  int w = 2;
  while ((std::int64_t{1} << w) + 1 < n) ++w;
  return w;
}

std::size_t square_tile_bound(int n) {
  std::size_t log2_ceil = 0;
  while ((std::size_t{1} << log2_ceil) < static_cast<std::size_t>(n)) ++log2_ceil;
  return kSquareTileSlope * log2_ceil + kSquareTileIntercept;
}

TileSet gen_fuzzy_square(int n) {
  const int w = square_counter_width(n);

  // Vertical counter: columns [0, w), rows [0, n).
  CounterSpec vertical;
  vertical.prefix = "v";
  vertical.width = w;
  std::tie(vertical.increment_seed, vertical.start) = counter_start(w, n);
  vertical.lsb_east = glue("fill", 1);
  vertical.seed_lsb_east = glue("corner", 2);

  // Horizontal counter: built upright, then turned so its growth runs along
  // +x over columns [w, n) and rows [0, w), MSB on top.
  CounterSpec horizontal;
  horizontal.prefix = "h";
  horizontal.width = w;
  std::tie(horizontal.increment_seed, horizontal.start) = counter_start(w, n - w);
  horizontal.msb_west = glue("fill", 1);
  horizontal.seed_lsb_south = glue("corner", 2);

  std::vector<TileType> tiles = counter_tiles(vertical);
  for (const auto& t : counter_tiles(horizontal)) tiles.push_back(rotated_clockwise(t));
  // Cooperative filler for the (n - w) x (n - w) interior.
  tiles.push_back(tile("fill", glue("fill", 1), glue("fill", 1), glue("fill", 1), glue("fill", 1)));
  return TileSet(std::move(tiles));
}

TileSet gen_demo(std::string_view id) {
  if (id == "all_strength2") {
    return TileSet({tile("A", {}, glue("g", 2), {}, {}), tile("B", {}, {}, {}, glue("g", 2))});
  }
  if (id == "strength1_pair") {
    return TileSet({tile("A", {}, glue("g", 1), {}, {}), tile("B", {}, {}, {}, glue("g", 1))});
  }
  if (id == "error_prone") {
    // Intended product: an L of strength-2 bonds (corner, right, left, top)
    // closed by `good`, which binds cooperatively to `right` and `left`.
    // `wrong` shares only the south glue of `good`; at temperature 1 it can sit
    // in the notch and be locked there by `lock`, which binds to it and to
    // `top` with strength 1 each, closing a stable cycle.
    return TileSet({
        tile("corner", glue("ac", 2), glue("ab", 2), {}, {}),
        tile("right", glue("bd", 1), {}, {}, glue("ab", 2)),
        tile("left", glue("ch", 2), glue("cd", 1), glue("ac", 2), {}),
        tile("top", {}, glue("gh", 1), glue("ch", 2), {}),
        tile("good", {}, {}, glue("bd", 1), glue("cd", 1)),
        tile("wrong", glue("el", 1), {}, glue("bd", 1), {}),
        tile("lock", {}, {}, glue("el", 1), glue("gh", 1)),
    });
  }
  throw Error("unknown demo id " + std::string(id));
}

}  // namespace tam
