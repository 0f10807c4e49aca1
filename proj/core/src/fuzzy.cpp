#include "tam/fuzzy.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "parallel.hpp"
#include "tam/error.hpp"
#include "tam/stability.hpp"
#include "tam/tdsl.hpp"

namespace tam {
namespace {

const Temperature kHigh{2};
const Temperature kLow{1};

std::vector<Point> domain_of(const Supertile& s) {
  std::vector<Point> out;
  for (const auto& p : s.assembly().placements()) out.push_back(p.pos);
  return out;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

FuzzySets compute_sets(const TileSet& tiles, const ExploreConfig& cfg) {
  ExploreConfig high = cfg;
  high.temperature = kHigh;
  ExploreConfig low = cfg;
  low.temperature = kLow;

  auto dp = explore(tiles, high);
  auto pp = explore(tiles, low);

  FuzzySets sets;
  sets.dp_saturated = dp.report.saturated;
  sets.pp_saturated = pp.report.saturated;
  sets.dp = std::make_shared<const ProducibleSet>(std::move(dp.set));
  sets.pp = std::make_shared<const ProducibleSet>(std::move(pp.set));

  sets.dt = terminals(*sets.dp, tiles, kHigh);
  for (const auto& s : sets.dt) sets.dt_keys.insert(s.key());

  for (const auto& e : sets.pp->entries()) {
    if (is_stable(e.supertile, tiles, kHigh)) {
      sets.ps.push_back(e.supertile);
      sets.ps_keys.insert(e.supertile.key());
    }
  }

  auto profiles = std::make_shared<std::vector<SideProfile>>();
  profiles->reserve(sets.dp->size());
  for (const auto& e : sets.dp->entries()) profiles->emplace_back(e.supertile, tiles);
  sets.dp_profiles = std::move(profiles);

  // Containments that must hold whenever the sets are complete.
  for (const auto& s : sets.dt) {
    if (!sets.dp->contains(s)) throw std::logic_error("DT member outside DP: " + s.key());
  }
  if (sets.pp_saturated) {
    for (const auto& e : sets.dp->entries()) {
      if (!sets.pp->contains(e.supertile)) {
        throw std::logic_error("DP member outside PP: " + e.supertile.key());
      }
    }
  }
  return sets;
}

Trace Closure::trace_to(std::size_t member) const {
  std::vector<TraceStep> reversed;
  std::size_t at = member;
  while (members[at].parent) {
    const auto& m = members[at];
    reversed.push_back({*m.partner, m.offset, m.supertile});
    at = *m.parent;
  }
  Trace trace{members[at].supertile, {}};
  trace.steps.assign(std::make_move_iterator(reversed.rbegin()), std::make_move_iterator(reversed.rend()));
  return trace;
}

Closure grow_closure(const Supertile& s, const FuzzySets& sets, const TileSet& tiles,
                     const ExploreConfig& cfg) {
  cfg.validate();
  const auto& dp = *sets.dp;
  const auto& dp_profiles = *sets.dp_profiles;

  std::deque<ClosureMember> members;
  std::deque<SideProfile> profiles;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<char> grows;
  bool capped = false;

  auto insert = [&](Supertile t, std::optional<std::size_t> parent, std::optional<Supertile> partner,
                    Offset offset) {
    if (index.contains(t.key())) return;
    if (members.size() >= cfg.max_supertiles) {
      capped = true;
      return;
    }
    index.emplace(t.key(), members.size());
    members.push_back({std::move(t), parent, std::move(partner), offset, false});
    profiles.emplace_back(members.back().supertile, tiles);
    grows.push_back(0);
  };
  auto offer = [&](std::size_t i, const Supertile& partner, Offset u) {
    auto result = attach(members[i].supertile, partner, u);
    if (!cfg.admits(result.size(), result.width(), result.height())) {
      capped = true;
      return;
    }
    insert(std::move(result), i, partner, u);
  };

  insert(s, std::nullopt, std::nullopt, {});
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t d = 0; d < dp.size(); ++d) {
      for_each_attachment(profiles[i], dp_profiles[d], tiles, kHigh, [&](Offset u, std::uint64_t) {
        grows[i] = 1;
        offer(i, dp[d].supertile, u);
      });
    }
    for (std::size_t j = 0; j <= i; ++j) {
      for_each_attachment(profiles[i], profiles[j], tiles, kHigh, [&](Offset u, std::uint64_t) {
        grows[i] = 1;
        grows[j] = 1;
        offer(i, members[j].supertile, u);
      });
    }
  }

  Closure closure;
  closure.saturated = !capped;
  for (std::size_t i = 0; i < members.size(); ++i) {
    members[i].terminal = !grows[i];
    closure.members.push_back(std::move(members[i]));
  }
  return closure;
}

FuzzyReport fuzzy_check(const TileSet& tiles, const ExploreConfig& cfg,
                        const std::optional<std::vector<Point>>& shape) {
  FuzzyReport report;
  report.sets = compute_sets(tiles, cfg);
  const auto& sets = report.sets;

  std::vector<Supertile> origins = sets.ps;
  std::sort(origins.begin(), origins.end(), SmallerFirst{});
  for (const auto& s : origins) {
    if (!sets.dp->contains(s)) ++report.ps_outside_dp;
  }

  std::vector<Closure> closures(origins.size());
  detail::parallel_for(origins.size(), detail::resolve_threads(cfg.threads),
                       [&](std::size_t k) { closures[k] = grow_closure(origins[k], sets, tiles, cfg); });

  for (std::size_t k = 0; k < origins.size(); ++k) {
    const auto& closure = closures[k];
    if (!closure.saturated) ++report.unsaturated_closures;
    // Terminality and DT membership are only exact when both sets are complete.
    if (!sets.dp_saturated || !closure.saturated) continue;
    std::vector<std::size_t> bad;
    for (std::size_t m = 0; m < closure.members.size(); ++m) {
      const auto& member = closure.members[m];
      if (member.terminal && !sets.in_dt(member.supertile)) bad.push_back(m);
    }
    std::sort(bad.begin(), bad.end(), [&](std::size_t a, std::size_t b) {
      return SmallerFirst{}(closure.members[a].supertile, closure.members[b].supertile);
    });
    for (auto m : bad) {
      report.violations.push_back(
          {ViolationKind::Growth, origins[k], closure.members[m].supertile, closure.trace_to(m)});
    }
  }

  if (shape && sets.dp_saturated) {
    const auto target = canonical_shape(*shape);
    std::vector<Supertile> dt = sets.dt;
    std::sort(dt.begin(), dt.end(), SmallerFirst{});
    for (const auto& t : dt) {
      if (domain_of(t) != target) {
        report.violations.push_back({ViolationKind::Shape, t, t, witness_sequence(*sets.dp, t)});
      }
    }
  }

  if (!report.violations.empty()) {
    report.verdict = Verdict::Fail;
  } else if (sets.dp_saturated && sets.pp_saturated && report.unsaturated_closures == 0) {
    report.verdict = Verdict::Pass;
  } else {
    report.verdict = Verdict::Inconclusive;
  }
  return report;
}

std::string format_report(const FuzzyReport& report, const TileSet& tiles) {
  const auto& sets = report.sets;
  std::ostringstream out;
  out << "verdict: " << to_string(report.verdict) << '\n';
  out << "dp: " << sets.dp->size() << '\n';
  out << "dt: " << sets.dt.size() << '\n';
  out << "pp: " << sets.pp->size() << '\n';
  out << "ps: " << sets.ps.size() << '\n';
  out << "dp_saturated: " << (sets.dp_saturated ? "true" : "false") << '\n';
  out << "pp_saturated: " << (sets.pp_saturated ? "true" : "false") << '\n';
  out << "unsaturated_closures: " << report.unsaturated_closures << '\n';
  out << "ps_outside_dp: " << report.ps_outside_dp << '\n';
  out << "growth_supply: dp+closure\n";
  out << "violations: " << report.violations.size() << '\n';
  for (std::size_t i = 0; i < report.violations.size(); ++i) {
    const auto& v = report.violations[i];
    out << '\n'
        << "violation " << (i + 1) << ' ' << (v.kind == ViolationKind::Growth ? "growth" : "shape")
        << " steps=" << v.trace.steps.size() << '\n';
    out << "origin:\n" << serialize_assembly(v.origin.assembly(), tiles);
    out << "bad_terminal:\n" << serialize_assembly(v.bad_terminal.assembly(), tiles);
    out << "end\n";
  }
  return out.str();
}

}  // namespace tam
