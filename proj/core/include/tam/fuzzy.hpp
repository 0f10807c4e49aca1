#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "tam/combine.hpp"
#include "tam/explore.hpp"

namespace tam {

// The four supertile classes of the fuzzy temperature model.
struct FuzzySets {
  std::shared_ptr<const ProducibleSet> dp;  // producible at tau = 2
  std::vector<Supertile> dt;                // terminal members of dp
  std::shared_ptr<const ProducibleSet> pp;  // producible at tau = 1
  std::vector<Supertile> ps;                // members of pp stable at tau = 2
  bool dp_saturated = false;
  bool pp_saturated = false;

  bool in_dt(const Supertile& s) const { return dt_keys.contains(s.key()); }
  bool in_ps(const Supertile& s) const { return ps_keys.contains(s.key()); }

  std::unordered_set<std::string> dt_keys;
  std::unordered_set<std::string> ps_keys;
  std::shared_ptr<const std::vector<SideProfile>> dp_profiles;  // parallel to dp entries
};

FuzzySets compute_sets(const TileSet& tiles, const ExploreConfig& cfg);

struct ClosureMember {
  Supertile supertile;
  std::optional<std::size_t> parent;  // closure member grown from
  std::optional<Supertile> partner;   // attached to the parent at `offset`
  Offset offset;
  bool terminal = false;
};

struct Closure {
  std::vector<ClosureMember> members;  // members[0] is the origin
  bool saturated = false;

  Trace trace_to(std::size_t member) const;
};

// Least set containing `s` and closed under tau = 2 attachment of DP members
// and of its own members, within the caps of `cfg`.
Closure grow_closure(const Supertile& s, const FuzzySets& sets, const TileSet& tiles,
                     const ExploreConfig& cfg);

enum class Verdict { Pass, Fail, Inconclusive };
const char* to_string(Verdict v);

enum class ViolationKind {
  Growth,  // a plausibly stable supertile grows into a terminal outside DT
  Shape,   // a DT member does not have the target shape
};

struct Violation {
  ViolationKind kind = ViolationKind::Growth;
  Supertile origin;
  Supertile bad_terminal;
  Trace trace;
};

struct FuzzyReport {
  FuzzySets sets;
  std::vector<Violation> violations;
  Verdict verdict = Verdict::Inconclusive;
  std::size_t unsaturated_closures = 0;
  std::size_t ps_outside_dp = 0;
};

// Checks PS => DT and, when `shape` is supplied, that every DT member has it.
FuzzyReport fuzzy_check(const TileSet& tiles, const ExploreConfig& cfg,
                        const std::optional<std::vector<Point>>& shape = std::nullopt);

std::string format_report(const FuzzyReport& report, const TileSet& tiles);

}  // namespace tam
