#include "tam/stability.hpp"

#include <algorithm>

#include "tam/error.hpp"

namespace tam {
namespace {

struct Adjacency {
  std::vector<std::vector<std::pair<std::size_t, Strength>>> out;

  explicit Adjacency(const BindingGraph& g) : out(g.vertex_count) {
    for (const auto& e : g.edges) {
      out[e.u].emplace_back(e.v, e.weight);
      out[e.v].emplace_back(e.u, e.weight);
    }
  }
};

bool connected(const Adjacency& adj) {
  std::vector<char> seen(adj.out.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto [w, weight] : adj.out[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == adj.out.size();
}

// Iterative low-link search; the grid graph has no parallel edges.
bool has_bridge(const Adjacency& adj) {
  const auto n = adj.out.size();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order(n, kUnvisited), low(n, 0), parent(n, kUnvisited), cursor(n, 0);
  std::size_t clock = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (order[root] != kUnvisited) continue;
    std::vector<std::size_t> stack{root};
    order[root] = low[root] = clock++;
    while (!stack.empty()) {
      auto v = stack.back();
      if (cursor[v] < adj.out[v].size()) {
        auto w = adj.out[v][cursor[v]++].first;
        if (order[w] == kUnvisited) {
          parent[w] = v;
          order[w] = low[w] = clock++;
          stack.push_back(w);
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], order[w]);
        }
        continue;
      }
      stack.pop_back();
      if (parent[v] != kUnvisited) {
        auto p = parent[v];
        low[p] = std::min(low[p], low[v]);
        if (low[v] > order[p]) return true;
      }
    }
  }
  return false;
}

// Stoer-Wagner over a dense matrix. Stops early once a phase cut drops below
// `stop_below` (pass 0 to compute the exact minimum).
std::uint64_t stoer_wagner(const BindingGraph& g, std::uint64_t stop_below) {
  const auto n = g.vertex_count;
  if (n < 2) return kNoCut;
  std::vector<std::uint64_t> w(n * n, 0);
  for (const auto& e : g.edges) {
    w[e.u * n + e.v] += e.weight;
    w[e.v * n + e.u] += e.weight;
  }
  std::vector<std::size_t> alive(n);
  for (std::size_t i = 0; i < n; ++i) alive[i] = i;

  std::uint64_t best = kNoCut;
  std::vector<std::uint64_t> key(n);
  std::vector<char> added(n);
  while (alive.size() > 1) {
    std::fill(added.begin(), added.end(), 0);
    for (auto v : alive) key[v] = 0;
    std::size_t prev = alive[0];
    std::size_t last = alive[0];
    for (std::size_t step = 0; step < alive.size(); ++step) {
      std::size_t pick = n;
      for (auto v : alive) {
        if (!added[v] && (pick == n || key[v] > key[pick])) pick = v;
      }
      added[pick] = 1;
      prev = last;
      last = pick;
      for (auto v : alive) {
        if (!added[v]) key[v] += w[pick * n + v];
      }
    }
    best = std::min(best, key[last]);
    if (best < stop_below) return best;
    for (auto v : alive) {
      w[prev * n + v] += w[last * n + v];
      w[v * n + prev] = w[prev * n + v];
    }
    w[prev * n + prev] = 0;
    alive.erase(std::find(alive.begin(), alive.end(), last));
  }
  return best;
}

bool stable_graph(const BindingGraph& g, Temperature tau) {
  if (g.vertex_count < 2) return true;
  const auto need = static_cast<std::uint64_t>(tau.value());
  Adjacency adj(g);
  if (!connected(adj)) return false;

  for (const auto& nbrs : adj.out) {
    std::uint64_t degree = 0;
    for (auto [v, weight] : nbrs) degree += weight;
    if (degree < need) return false;
  }
  Strength lightest = g.edges.front().weight;
  for (const auto& e : g.edges) lightest = std::min(lightest, e.weight);
  if (lightest >= need) return true;
  if (2ull * lightest >= need && !has_bridge(adj)) return true;
  return stoer_wagner(g, need) >= need;
}

}  // namespace

BindingGraph binding_graph(const Assembly& a, const TileSet& tiles) {
  BindingGraph g;
  auto ps = a.placements();
  g.vertex_count = ps.size();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (auto d : {Direction::East, Direction::North}) {
      auto q = shifted(ps[i].pos, unit(d));
      auto it = std::lower_bound(ps.begin(), ps.end(), q,
                                 [](const Placement& p, Point v) { return p.pos < v; });
      if (it == ps.end() || it->pos != q) continue;
      if (auto s = tiles.bond(ps[i].tile, d, it->tile); s > 0) {
        g.edges.push_back({i, static_cast<std::size_t>(it - ps.begin()), s});
      }
    }
  }
  return g;
}

std::uint64_t min_cut_weight(const BindingGraph& g) {
  if (g.vertex_count < 2) return kNoCut;
  if (!connected(Adjacency(g))) return 0;
  return stoer_wagner(g, 0);
}

bool is_stable(const Assembly& a, const TileSet& tiles, Temperature tau) {
  return stable_graph(binding_graph(a, tiles), tau);
}

bool is_stable(const Supertile& s, const TileSet& tiles, Temperature tau) {
  if (auto cached = s.cached_stability(tau.value())) return *cached;
  bool stable = is_stable(s.assembly(), tiles, tau);
  s.cache_stability(tau.value(), stable);
  return stable;
}

std::uint64_t interface_strength(const Assembly& a, const Assembly& b, const TileSet& tiles) {
  std::uint64_t total = 0;
  for (const auto& p : b.placements()) {
    if (a.contains(p.pos)) throw OverlapError(p.pos);
    for (auto d : kDirections) {
      if (auto t = a.at(shifted(p.pos, unit(d)))) total += tiles.bond(p.tile, d, *t);
    }
  }
  return total;
}

bool stable_union(const Assembly& a, const Assembly& b, const TileSet& tiles, Temperature tau) {
  auto strength = interface_strength(a, b, tiles);
  if (!is_stable(a, tiles, tau) || !is_stable(b, tiles, tau)) {
    throw Error("precondition: operands must be τ-stable");
  }
  return strength >= static_cast<std::uint64_t>(tau.value());
}

}  // namespace tam
