#include "tam/tdsl.hpp"

#include <charconv>
#include <optional>
#include <set>
#include <sstream>

namespace tam {
namespace {

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

struct Line {
  int number = 0;
  std::string_view raw;
  std::vector<Token> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty() || number == 0) {
    auto nl = text.find('\n');
    auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    Line line{++number, raw, {}};
    auto body = raw.substr(0, raw.find('#'));
    std::size_t i = 0;
    while (i < body.size()) {
      while (i < body.size() && is_space(body[i])) ++i;
      auto start = i;
      while (i < body.size() && !is_space(body[i])) ++i;
      if (i > start) line.tokens.push_back({body.substr(start, i - start), static_cast<int>(start) + 1});
    }
    lines.push_back(std::move(line));
    if (nl == std::string_view::npos) break;
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, int column, std::string message) {
  throw ParseError(line.number, column, std::move(message), std::string(line.raw));
}

std::optional<Direction> side_keyword(std::string_view word) {
  if (word == "north") return Direction::North;
  if (word == "east") return Direction::East;
  if (word == "south") return Direction::South;
  if (word == "west") return Direction::West;
  return std::nullopt;
}

template <typename Int>
std::optional<Int> to_int(std::string_view s) {
  Int value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

void expect_tokens(const Line& line, std::size_t count, const char* usage) {
  if (line.tokens.size() > count) fail(line, line.tokens[count].column, "unexpected token; expected " + std::string(usage));
}

}  // namespace

ParseError::ParseError(int line, int column, std::string message, std::string excerpt)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(std::move(message)),
      excerpt_(std::move(excerpt)) {}

bool is_identifier(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

TileSetDocument parse_tileset(std::string_view text) {
  std::vector<TileType> tiles;
  std::vector<std::array<bool, 4>> seen_sides;
  std::set<std::string, std::less<>> names;
  std::optional<Temperature> temperature;
  int last_line = 1;

  for (const auto& line : split_lines(text)) {
    last_line = line.number;
    if (line.tokens.empty()) continue;
    const auto& head = line.tokens[0];

    if (head.text == "temperature") {
      if (temperature) fail(line, head.column, "duplicate temperature");
      if (line.tokens.size() < 2) fail(line, head.column + 11, "missing temperature value");
      expect_tokens(line, 2, "'temperature <int>'");
      auto value = to_int<int>(line.tokens[1].text);
      if (!value || *value < 1) fail(line, line.tokens[1].column, "temperature must be a positive integer");
      temperature = Temperature(*value);
    } else if (head.text == "tile") {
      if (line.tokens.size() < 2) fail(line, head.column + 4, "missing tile name");
      expect_tokens(line, 2, "'tile <name>'");
      const auto& name = line.tokens[1];
      if (!is_identifier(name.text)) fail(line, name.column, "invalid tile name " + std::string(name.text));
      if (names.contains(name.text)) fail(line, name.column, "duplicate tile name " + std::string(name.text));
      names.emplace(name.text);
      tiles.push_back({std::string(name.text), {}});
      seen_sides.push_back({});
    } else if (auto dir = side_keyword(head.text)) {
      if (tiles.empty()) fail(line, head.column, "side line outside of a tile");
      if (line.tokens.size() < 3) fail(line, head.column, "expected '" + std::string(head.text) + " <label> <strength>'");
      expect_tokens(line, 3, "'<side> <label> <strength>'");
      const auto& label = line.tokens[1];
      const auto& strength = line.tokens[2];
      if (!is_identifier(label.text)) fail(line, label.column, "invalid glue label " + std::string(label.text));
      if (!all_digits(strength.text)) fail(line, strength.column, "malformed strength " + std::string(strength.text));
      if (strength.text.size() != 1) fail(line, strength.column, "strength out of range");
      auto& flags = seen_sides.back();
      if (flags[index_of(*dir)]) fail(line, head.column, "duplicate " + std::string(head.text) + " side");
      flags[index_of(*dir)] = true;
      tiles.back().glue(*dir) = Glue{std::string(label.text), static_cast<Strength>(strength.text[0] - '0')};
    } else {
      fail(line, head.column, "unknown keyword " + std::string(head.text));
    }
  }
  if (tiles.empty()) throw ParseError(last_line, 1, "no tiles declared", "");
  return {TileSet(std::move(tiles)), temperature.value_or(Temperature{})};
}

std::string serialize_tileset(const TileSet& tiles, Temperature tau) {
  std::ostringstream out;
  out << "temperature " << tau.value() << '\n';
  for (const auto& t : tiles.tiles()) {
    out << '\n' << "tile " << t.name << '\n';
    for (auto d : kDirections) {
      const auto& g = t.glue(d);
      if (g.label.empty() && g.strength == 0) continue;
      if (g.strength > 9) throw Error("tile " + t.name + ": strength " + std::to_string(g.strength) + " is not representable");
      out << "  " << to_string(d) << ' ' << g.label << ' ' << g.strength << '\n';
    }
  }
  return out.str();
}

namespace {

struct RawPlacement {
  Point pos;
  std::string_view name;
  const Line* line;
};

std::vector<RawPlacement> parse_points(const std::vector<Line>& lines, bool names_required) {
  std::vector<RawPlacement> out;
  std::set<Point> seen;
  for (const auto& line : lines) {
    if (line.tokens.empty()) continue;
    const auto& tok = line.tokens;
    if (tok.size() < (names_required ? 3u : 2u)) {
      fail(line, tok.back().column, "expected '<x> <y> <tile>'");
    }
    expect_tokens(line, 3, "'<x> <y> <tile>'");
    auto x = to_int<Coord>(tok[0].text);
    if (!x) fail(line, tok[0].column, "malformed integer " + std::string(tok[0].text));
    auto y = to_int<Coord>(tok[1].text);
    if (!y) fail(line, tok[1].column, "malformed integer " + std::string(tok[1].text));
    Point p{*x, *y};
    if (!seen.insert(p).second) fail(line, tok[0].column, "duplicate coordinate " + to_string(p));
    out.push_back({p, tok.size() > 2 ? tok[2].text : std::string_view{}, &line});
  }
  if (out.empty()) throw ParseError(1, 1, "empty assembly", lines.empty() ? "" : std::string(lines[0].raw));
  return out;
}

}  // namespace

Assembly parse_assembly(std::string_view text, const TileSet& tiles) {
  auto lines = split_lines(text);
  std::vector<Placement> placements;
  for (const auto& raw : parse_points(lines, true)) {
    auto idx = tiles.find(std::string(raw.name));
    if (!idx) fail(*raw.line, raw.line->tokens[2].column, "unknown tile name " + std::string(raw.name));
    placements.push_back({raw.pos, *idx});
  }
  return Assembly(std::move(placements));
}

std::vector<Point> parse_shape(std::string_view text) {
  auto lines = split_lines(text);
  std::vector<Point> points;
  for (const auto& raw : parse_points(lines, false)) points.push_back(raw.pos);
  return points;
}

std::string serialize_assembly(const Assembly& a, const TileSet& tiles) {
  std::ostringstream out;
  for (const auto& p : a.placements()) {
    out << p.pos.x << ' ' << p.pos.y << ' ' << tiles[p.tile].name << '\n';
  }
  return out.str();
}

}  // namespace tam
