#pragma once

// Brute-force references for tests. Nothing here calls into the primary
// algorithms; only the value types are shared.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rrfair/hapset.hpp"
#include "rrfair/rational.hpp"
#include "rrfair/schedule.hpp"
#include "rrfair/venue.hpp"

namespace rrfair::oracle {

struct EnumerationScope {
  int teams = 4;  // 4 or 6
  bool single_break = false;
  bool ranking_fair = false;
  /// Keep only schedules whose team HAPs equal this set (any slot order).
  std::optional<std::vector<HomeAwayPattern>> haps = std::nullopt;
};

/// Called once per schedule; return false to stop the enumeration.
using ScheduleSink = std::function<bool(const Schedule&)>;

struct EnumerationStats {
  std::uint64_t factorizations = 0;  // round-labelled 1-factorizations
  std::uint64_t schedules = 0;       // schedules passed to the sink
};

/// Every round robin schedule on scope.teams teams with every orientation,
/// restricted by the scope's filters. Filters are applied while orienting,
/// so ranking-fair and single-break scopes stay cheap at n = 6.
EnumerationStats enumerate_schedules(const EnumerationScope& scope, const ScheduleSink& sink);

/// Same as enumerate_schedules without materialising schedules.
EnumerationStats count_schedules(const EnumerationScope& scope);

/// Literal recount of every window; no prefix sums.
Rational naive_delta(std::span<const Venue> row);

/// All rotations of the sequence and of its reversal, materialised, maximum
/// taken.
std::vector<int> naive_canonical(std::span<const int> gaps);

/// Break count of a circular pattern, by direct comparison of neighbours.
int naive_break_count(std::span<const Venue> pattern);

/// True iff every team's venues against opponents listed strongest first
/// alternate.
bool naive_ranking_fair(const Schedule& schedule);

}  // namespace rrfair::oracle
