#pragma once

#include <span>
#include <vector>

#include "rrfair/ranked_venue_matrix.hpp"
#include "rrfair/rational.hpp"
#include "rrfair/schedule.hpp"
#include "rrfair/venue.hpp"

namespace rrfair {

/// Sum over all windows [i, j] of length >= 2 of |home games in window -
/// half the window length|. The row is a ranked venue vector of length m-1.
/// Throws std::invalid_argument for rows shorter than 2.
Rational delta_t(std::span<const Venue> row);

/// delta_t shifted by its alternating-row value (m-2)^2/8 and scaled by
/// m(m-1)(m-2)/24, where m = row length + 1. For even m the result lies in
/// [0, 1]; for odd m the same formula is applied unchanged.
Rational f_t(std::span<const Venue> row);

struct TeamFairness {
  int rank = 0;
  Rational delta;
  Rational f;
};

struct FairnessReport {
  std::vector<TeamFairness> per_team;
  Rational aggregate;  // mean of per-team f
};

FairnessReport fairness_report(const RankedVenueMatrix& matrix);
FairnessReport fairness_report(const Schedule& schedule);

}  // namespace rrfair
