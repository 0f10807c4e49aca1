#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "tam/assembly.hpp"
#include "tam/supertile.hpp"
#include "tam/tile.hpp"

namespace tam {

struct BindingEdge {
  std::size_t u = 0;  // indices into Assembly::placements()
  std::size_t v = 0;
  Strength weight = 0;
};

struct BindingGraph {
  std::size_t vertex_count = 0;
  std::vector<BindingEdge> edges;
};

inline constexpr std::uint64_t kNoCut = std::numeric_limits<std::uint64_t>::max();

BindingGraph binding_graph(const Assembly& a, const TileSet& tiles);

// Exact global minimum cut (Stoer-Wagner). kNoCut for a single vertex.
std::uint64_t min_cut_weight(const BindingGraph& g);

bool is_stable(const Assembly& a, const TileSet& tiles, Temperature tau);
bool is_stable(const Supertile& s, const TileSet& tiles, Temperature tau);

// Total matched-glue strength across the boundary of two disjoint assemblies.
std::uint64_t interface_strength(const Assembly& a, const Assembly& b, const TileSet& tiles);

// For tau-stable disjoint operands the union is stable iff the interface
// carries at least tau. Throws if an operand is not tau-stable.
bool stable_union(const Assembly& a, const Assembly& b, const TileSet& tiles, Temperature tau);

}  // namespace tam
