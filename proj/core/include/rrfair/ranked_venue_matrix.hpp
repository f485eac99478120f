#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "rrfair/schedule.hpp"
#include "rrfair/venue.hpp"

namespace rrfair {

/// Thrown when team t's venue against u equals u's venue against t.
class InconsistentMatrix : public std::invalid_argument {
 public:
  InconsistentMatrix(int first, int second);
  int first() const noexcept { return first_; }
  int second() const noexcept { return second_; }

 private:
  int first_;
  int second_;
};

/// Row t-1 lists team t's venue against its opponents sorted by rank,
/// strongest first. Any team count m >= 2 is accepted, odd included.
class RankedVenueMatrix {
 public:
  /// Throws std::invalid_argument on a row of the wrong length and
  /// InconsistentMatrix on a mirror conflict.
  explicit RankedVenueMatrix(std::vector<std::vector<Venue>> rows);

  int teams() const noexcept { return static_cast<int>(rows_.size()); }
  std::span<const Venue> row(int team) const { return rows_.at(team - 1); }

  /// Venue of `team` against `opponent`.
  Venue venue(int team, int opponent) const;

  friend bool operator==(const RankedVenueMatrix&, const RankedVenueMatrix&) = default;

 private:
  std::vector<std::vector<Venue>> rows_;
};

/// Position of `opponent` in `team`'s ranked row (0-based).
constexpr int ranked_position(int team, int opponent) noexcept {
  return opponent < team ? opponent - 1 : opponent - 2;
}

RankedVenueMatrix ranked_venue_matrix(const Schedule& schedule);

}  // namespace rrfair
