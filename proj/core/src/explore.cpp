#include "tam/explore.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "parallel.hpp"
#include "tam/combine.hpp"
#include "tam/error.hpp"

namespace tam {
namespace {

struct Found {
  std::size_t partner = 0;
  Offset offset;
  std::optional<Supertile> result;  // empty when the result exceeded a cap
};

Coord span_of(Coord a_extent, Coord b_extent, Coord shift) {
  Coord lo = std::min<Coord>(0, shift);
  Coord hi = std::max<Coord>(a_extent, shift + b_extent);
  return hi - lo;
}

}  // namespace

void ExploreConfig::validate() const {
  if (max_tiles == 0) throw Error("max_tiles must be positive");
  if (max_supertiles == 0) throw Error("max_supertiles must be positive");
  if (bounding_box && (bounding_box->first <= 0 || bounding_box->second <= 0)) {
    throw Error("bounding box must have positive width and height");
  }
}

std::size_t ExploreConfig::effective_max_tiles() const {
  if (!bounding_box) return max_tiles;
  auto area = static_cast<std::size_t>(bounding_box->first) * static_cast<std::size_t>(bounding_box->second);
  return std::min(max_tiles, area);
}

bool ExploreConfig::admits(std::size_t tiles, Coord width, Coord height) const {
  if (tiles > effective_max_tiles()) return false;
  if (bounding_box && (width > bounding_box->first || height > bounding_box->second)) return false;
  return true;
}

ProducibleSet::ProducibleSet(Temperature tau, bool saturated, std::vector<ProducibleEntry> entries)
    : tau_(tau), saturated_(saturated), entries_(std::move(entries)) {
  index_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) index_.emplace(entries_[i].supertile.key(), i);
}

std::optional<std::size_t> ProducibleSet::find(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ExploreResult explore(const TileSet& tiles, const ExploreConfig& cfg) {
  cfg.validate();
  const auto tau = cfg.temperature;
  const auto threads = detail::resolve_threads(cfg.threads);
  const std::size_t max_tiles = cfg.effective_max_tiles();
  // Entries processed between merges. Small chunks bound memory and let the
  // combinable flags of recent entries prune oversized pairs sooner. Fixed,
  // so that counters do not depend on the thread count.
  constexpr std::size_t chunk_size = 64;

  std::deque<ProducibleEntry> entries;
  std::deque<SideProfile> profiles;
  std::unordered_map<std::string, std::size_t> index;
  // by_side[d][g][n]: entries of n tiles with an exposed side facing d that
  // carries glue g, ascending. Entries above max_tiles never exist.
  std::array<std::vector<std::vector<std::vector<std::size_t>>>, 4> by_side;
  for (auto& v : by_side) v.resize(tiles.glue_count());
  ExploreReport report;

  auto insert = [&](Supertile s, std::optional<std::size_t> left, std::optional<std::size_t> right,
                    Offset offset) {
    if (index.contains(s.key())) return;
    if (entries.size() >= cfg.max_supertiles) {
      ++report.cap_hits;
      return;
    }
    const std::size_t id = entries.size();
    const std::size_t n = s.size();
    index.emplace(s.key(), id);
    entries.push_back({std::move(s), left, right, offset, false});
    profiles.emplace_back(entries.back().supertile, tiles);
    for (auto d : kDirections) {
      for (const auto& side : profiles.back().sides(d)) {
        auto& by_size = by_side[index_of(d)][side.glue];
        if (by_size.size() <= n) by_size.resize(n + 1);
        auto& list = by_size[n];
        if (list.empty() || list.back() != id) list.push_back(id);
      }
    }
  };

  // Entries j <= i of lo..hi tiles sharing a glue with entry i, ascending.
  auto partners = [&](std::size_t i, std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> out;
    for (auto d : kDirections) {
      const auto& list_for = by_side[index_of(opposite(d))];
      std::uint32_t last = 0;
      for (const auto& side : profiles[i].sides(d)) {
        if (side.glue == last) continue;  // sides are sorted by glue
        last = side.glue;
        const auto& by_size = list_for[side.glue];
        for (std::size_t n = lo; n <= hi && n < by_size.size(); ++n) {
          for (auto j : by_size[n]) {
            if (j > i) break;
            out.push_back(j);
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  for (TileIndex t = 0; t < tiles.size(); ++t) {
    insert(Supertile(Assembly({{{0, 0}, t}})), std::nullopt, std::nullopt, {});
  }

  std::vector<std::size_t> uncombined;  // processed entries not yet combinable
  std::size_t processed = 0;
  while (processed < entries.size()) {
    const std::size_t chunk_end = std::min(entries.size(), processed + chunk_size);
    const std::size_t chunk = chunk_end - processed;
    // Once the supertile cap is reached new products are only counted.
    const bool full = entries.size() >= cfg.max_supertiles;
    // After a cap hit an oversized pair only matters for the combinable
    // flags. Partner flags are read as of the chunk start, which keeps the
    // result deterministic.
    const bool capped_before = report.cap_hits > 0;
    std::vector<std::vector<Found>> found(chunk);
    std::vector<std::uint64_t> queries(chunk, 0);

    detail::parallel_for(chunk, threads, [&](std::size_t k) {
      const std::size_t i = processed + k;
      const auto& self = entries[i].supertile;
      const std::size_t room = self.size() < max_tiles ? max_tiles - self.size() : 0;
      const std::size_t small_hi = full ? 0 : room;
      bool self_combinable = entries[i].combinable;
      bool capped = capped_before;

      for (std::size_t j : partners(i, 1, small_hi)) {
        const auto& other = entries[j].supertile;
        ++queries[k];
        for_each_attachment(profiles[i], profiles[j], tiles, tau, [&](Offset u, std::uint64_t) {
          Coord w = span_of(self.width(), other.width(), u.dx);
          Coord h = span_of(self.height(), other.height(), u.dy);
          if (!cfg.admits(self.size() + other.size(), w, h)) {
            found[k].push_back({j, u, std::nullopt});
            capped = true;
            return;
          }
          found[k].push_back({j, u, attach(self, other, u)});
        });
      }
      self_combinable = self_combinable || !found[k].empty();

      // Oversized pairs: one event per attaching pair marks both sides.
      auto oversized = [&](std::size_t j) {
        ++queries[k];
        if (attaches(profiles[i], profiles[j], tiles, tau)) {
          found[k].push_back({j, {}, std::nullopt});
          capped = true;
          self_combinable = true;
        }
      };
      auto settled = [&] { return capped && self_combinable; };
      std::unordered_set<std::size_t> visited;
      if (!settled()) {
        // Walk the index lazily; usually the first attaching partner settles i.
        for (auto d : kDirections) {
          const auto& list_for = by_side[index_of(opposite(d))];
          for (const auto& side : profiles[i].sides(d)) {
            const auto& by_size = list_for[side.glue];
            for (std::size_t n = small_hi + 1; n <= max_tiles && n < by_size.size(); ++n) {
              for (auto j : by_size[n]) {
                if (j > i || settled()) break;
                if (visited.insert(j).second) oversized(j);
              }
            }
          }
        }
        if (!settled()) return;
      }
      // Only partners whose own flag is still unset can change anything now.
      auto check = [&](std::size_t j) {
        if (j > i || entries[j].supertile.size() <= small_hi) return;
        if (j < processed && entries[j].combinable) return;
        if (visited.contains(j)) return;
        oversized(j);
      };
      for (std::size_t j : uncombined) check(j);
      for (std::size_t j = processed; j <= i; ++j) check(j);
    });

    for (std::size_t k = 0; k < chunk; ++k) {
      const std::size_t i = processed + k;
      report.combination_queries += queries[k];
      for (auto& f : found[k]) {
        entries[i].combinable = true;
        entries[f.partner].combinable = true;
        if (!f.result) {
          ++report.cap_hits;
          continue;
        }
        insert(std::move(*f.result), i, f.partner, f.offset);
      }
    }
    std::erase_if(uncombined, [&](std::size_t j) { return entries[j].combinable; });
    for (std::size_t j = processed; j < chunk_end; ++j) {
      if (!entries[j].combinable) uncombined.push_back(j);
    }
    processed = chunk_end;
  }

  report.saturated = report.cap_hits == 0;
  report.supertiles = entries.size();
  std::vector<ProducibleEntry> flat(std::make_move_iterator(entries.begin()),
                                    std::make_move_iterator(entries.end()));
  return {ProducibleSet(tau, report.saturated, std::move(flat)), report};
}

std::vector<Supertile> terminals(const ProducibleSet& p, const TileSet& tiles, Temperature tau) {
  std::vector<Supertile> out;
  if (tau == p.temperature()) {
    for (const auto& e : p.entries()) {
      if (!e.combinable) out.push_back(e.supertile);
    }
    return out;
  }
  std::vector<SideProfile> profiles;
  profiles.reserve(p.size());
  for (const auto& e : p.entries()) profiles.emplace_back(e.supertile, tiles);
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool grows = false;
    for (std::size_t j = 0; j < p.size() && !grows; ++j) grows = attaches(profiles[i], profiles[j], tiles, tau);
    if (!grows) out.push_back(p[i].supertile);
  }
  return out;
}

std::vector<Point> canonical_shape(std::vector<Point> points) {
  if (points.empty()) return points;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  Coord min_x = points.front().x;
  Coord min_y = points.front().y;
  for (const auto& p : points) min_x = std::min(min_x, p.x);
  for (auto& p : points) p = shifted(p, negated(Offset{min_x, min_y}));
  return points;
}

bool strictly_self_assembles(const ProducibleSet& p, const TileSet& tiles, Temperature tau,
                             const std::vector<Point>& shape) {
  if (!p.saturated()) throw Error("inconclusive: exploration not saturated");
  const auto target = canonical_shape(shape);
  for (const auto& t : terminals(p, tiles, tau)) {
    std::vector<Point> domain;
    for (const auto& pl : t.assembly().placements()) domain.push_back(pl.pos);
    if (domain != target) return false;
  }
  return true;
}

Trace witness_sequence(const ProducibleSet& p, const Supertile& s) {
  auto idx = p.find(s.key());
  if (!idx) throw Error("not producible under caps");
  std::vector<TraceStep> reversed;
  std::size_t at = *idx;
  while (p[at].left) {
    const auto& e = p[at];
    reversed.push_back({p[*e.right].supertile, e.offset, e.supertile});
    at = *e.left;
  }
  Trace trace{p[at].supertile, {}};
  trace.steps.assign(std::make_move_iterator(reversed.rbegin()), std::make_move_iterator(reversed.rend()));
  return trace;
}

std::string manifest(const ProducibleSet& p, const TileSet& tiles, bool terminals_only) {
  std::unordered_map<std::string, bool> terminal;
  for (const auto& t : terminals(p, tiles, p.temperature())) terminal.emplace(t.key(), true);
  std::vector<const ProducibleEntry*> order;
  for (const auto& e : p.entries()) {
    if (!terminals_only || terminal.contains(e.supertile.key())) order.push_back(&e);
  }
  std::sort(order.begin(), order.end(),
            [](const auto* a, const auto* b) { return a->supertile.key() < b->supertile.key(); });
  std::ostringstream out;
  for (const auto* e : order) {
    out << e->supertile.key() << ' ' << e->supertile.size() << ' '
        << (terminal.contains(e->supertile.key()) ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace tam
