#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tam/supertile.hpp"
#include "tam/tile.hpp"

namespace tam {

struct ExploreConfig {
  Temperature temperature{};
  std::size_t max_tiles = 64;
  std::size_t max_supertiles = 1'000'000;
  std::optional<std::pair<Coord, Coord>> bounding_box;  // (width, height)
  unsigned threads = 0;  // 0 selects the hardware concurrency

  // Throws Error on nonpositive caps.
  void validate() const;
  // max_tiles clamped to the bounding-box area.
  std::size_t effective_max_tiles() const;
  bool admits(std::size_t tiles, Coord width, Coord height) const;
};

struct ProducibleEntry {
  Supertile supertile;
  // Witness: `left` combined with `right` placed at `offset`. Both empty for
  // singletons.
  std::optional<std::size_t> left;
  std::optional<std::size_t> right;
  Offset offset;
  // Some attachment with an entry exists (even if its result was capped).
  bool combinable = false;
};

class ProducibleSet {
 public:
  ProducibleSet(Temperature tau, bool saturated, std::vector<ProducibleEntry> entries);

  Temperature temperature() const { return tau_; }
  bool saturated() const { return saturated_; }
  std::size_t size() const { return entries_.size(); }
  const ProducibleEntry& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const ProducibleEntry> entries() const { return entries_; }
  std::optional<std::size_t> find(const std::string& key) const;
  bool contains(const Supertile& s) const { return find(s.key()).has_value(); }

 private:
  Temperature tau_;
  bool saturated_ = false;
  std::vector<ProducibleEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct ExploreReport {
  bool saturated = false;
  std::size_t supertiles = 0;
  std::uint64_t combination_queries = 0;
  std::uint64_t cap_hits = 0;
};

struct ExploreResult {
  ProducibleSet set;
  ExploreReport report;
};

ExploreResult explore(const TileSet& tiles, const ExploreConfig& cfg);

// Entries with an empty combination set against every entry. When `tau`
// differs from the exploration temperature the check is recomputed pairwise.
std::vector<Supertile> terminals(const ProducibleSet& p, const TileSet& tiles, Temperature tau);

// Throws Error("inconclusive: exploration not saturated") for capped sets.
bool strictly_self_assembles(const ProducibleSet& p, const TileSet& tiles, Temperature tau,
                             const std::vector<Point>& shape);

struct TraceStep {
  Supertile partner;
  Offset offset;  // of the partner relative to the previous supertile
  Supertile result;
};

struct Trace {
  Supertile start;
  std::vector<TraceStep> steps;

  const Supertile& result() const { return steps.empty() ? start : steps.back().result; }
};

// Throws Error("not producible under caps") if `s` is not an entry.
Trace witness_sequence(const ProducibleSet& p, const Supertile& s);

// One line per supertile: "<key> <size> <terminal 0|1>", sorted by key.
std::string manifest(const ProducibleSet& p, const TileSet& tiles, bool terminals_only = false);

// Canonical shape key for a set of lattice points.
std::vector<Point> canonical_shape(std::vector<Point> points);

}  // namespace tam
