#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tam/assembly.hpp"
#include "tam/error.hpp"
#include "tam/tile.hpp"

namespace tam {

class ParseError : public Error {
 public:
  ParseError(int line, int column, std::string message, std::string excerpt);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }
  const std::string& excerpt() const { return excerpt_; }

 private:
  int line_;
  int column_;
  std::string message_;
  std::string excerpt_;
};

struct TileSetDocument {
  TileSet tiles;
  Temperature temperature;
};

// .tds format:
//   # comment
//   temperature <int>
//   tile <name>
//     north|east|south|west <label> <strength 0..9>
TileSetDocument parse_tileset(std::string_view text);
std::string serialize_tileset(const TileSet& tiles, Temperature tau);

// .asm format: "<x> <y> <tile name>" per line.
Assembly parse_assembly(std::string_view text, const TileSet& tiles);
std::string serialize_assembly(const Assembly& a, const TileSet& tiles);

// .asm file read as a bare shape; tile names are not resolved.
std::vector<Point> parse_shape(std::string_view text);

bool is_identifier(std::string_view token);

}  // namespace tam
