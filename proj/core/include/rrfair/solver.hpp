#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rrfair/hapset.hpp"
#include "rrfair/schedule.hpp"

namespace rrfair {

/// Bit r-1 set <=> round r.
using RoundMask = std::uint64_t;

/// A single-break HAP set prepared for the ranking-fair search.
///
/// Ranks follow the orientation where team 1 hosts team 2, so home-break
/// patterns take the odd ranks and away-break patterns the even ranks.
/// `usable(p, q)` holds the rounds in which the pair may meet when the team
/// on p is stronger: the rounds where p's venue is the one the stronger team
/// gets under that orientation (away for equal break kinds, home otherwise)
/// and q has the other venue.
struct SolveInstance {
  HapSet haps;
  std::vector<bool> home_break;  // per slot
  int slots() const noexcept { return haps.size(); }
  int rounds() const noexcept { return haps.rounds(); }
  RoundMask usable(int p, int q) const { return usable_[p * slots() + q]; }
  std::vector<int> usable_rounds(int p, int q) const;

  std::vector<RoundMask> usable_;
};

/// Throws std::invalid_argument unless the set is single-break with as many
/// home-break as away-break patterns, and n <= 64.
SolveInstance build_instance(const HapSet& haps);

struct SolveBudget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 300.0;
};

enum class SolveStatus { feasible, infeasible, unknown };

const char* to_string(SolveStatus status) noexcept;

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t failures = 0;
  double seconds = 0.0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::unknown;
  /// Present iff feasible.
  std::optional<Schedule> schedule;
  /// Rank of the team playing each slot's pattern; empty unless feasible.
  std::vector<int> rank_of_slot;
  SolveStats stats;
};

/// Complete search for a ranking-fair schedule realising `haps` exactly.
/// Infeasible is only reported after the search space is exhausted; hitting
/// the budget yields unknown.
SolveResult solve_ranking_fair(const HapSet& haps, const SolveBudget& budget = {});

struct DSequenceVerdict {
  bool degenerate = false;  // expansion produced duplicate patterns
  SolveResult result;
};

/// Every canonical D-sequence with n/2 gaps summing to n-1, expanded and
/// solved. Only n in {4, 6}.
std::map<DSequence, DSequenceVerdict> solve_all_single_break(int n, const SolveBudget& budget = {});

/// All compositions of `total` into `parts` positive parts, in lexicographic
/// order.
std::vector<std::vector<int>> compositions(int total, int parts);

}  // namespace rrfair
