#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rrfair/venue.hpp"

namespace rrfair {

/// One game: `home` hosts `away` in `round`. Teams are ranks, 1 strongest.
struct Match {
  int round = 0;
  int home = 0;
  int away = 0;
  friend auto operator<=>(const Match&, const Match&) = default;
};

/// Round and venue assignment of a single round robin over n teams.
///
/// Construction checks only that n is even and >= 4 and that every match has
/// in-range ranks and rounds with distinct teams. Whether the matches form a
/// valid round robin is answered by verify_feasible(). Matches are kept
/// sorted by (round, home).
class Schedule {
 public:
  Schedule(int teams, std::vector<Match> matches);

  int teams() const noexcept { return teams_; }
  int rounds() const noexcept { return teams_ - 1; }
  std::span<const Match> matches() const noexcept { return matches_; }
  std::vector<Match> round(int r) const;

  /// First match between i and j, if any.
  std::optional<Match> find(int i, int j) const;

  /// Every venue swapped.
  Schedule complement() const;

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  int teams_;
  std::vector<Match> matches_;
};

struct Violation {
  enum class Kind {
    duplicate_team_in_round,
    team_missing_in_round,
    pair_repeated,
    pair_missing,
  };
  Kind kind;
  int round = 0;  // 0 when not tied to one round
  int team = 0;
  int other = 0;
  std::string message() const;
};

/// Empty iff every round holds each team once and every pair meets once.
std::vector<Violation> verify_feasible(const Schedule& schedule);

/// Venue of i against j in the ranking-fair orientation where team 1 hosts
/// team 2: with equal parity the stronger team is away, otherwise home.
Venue expected_venue(int i, int j);

enum class FairOrientation { table, complement, none };

struct RankingFairVerdict {
  FairOrientation orientation = FairOrientation::none;
  /// Matches disagreeing with the closer of the two fair orientations.
  std::vector<Match> violations;
  bool fair() const noexcept { return orientation != FairOrientation::none; }
};

RankingFairVerdict is_ranking_fair(const Schedule& schedule);

/// Venue of team t against its opponents in rank order (strongest first).
/// Requires every pair to meet exactly once.
std::vector<Venue> ranking_hap(const Schedule& schedule, int team);

/// HAP of each team; element t-1 belongs to team t. Requires each team to
/// play exactly once per round.
std::vector<HomeAwayPattern> team_patterns(const Schedule& schedule);

}  // namespace rrfair
