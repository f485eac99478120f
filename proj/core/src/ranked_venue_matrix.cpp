#include "rrfair/ranked_venue_matrix.hpp"

#include <string>

namespace rrfair {

InconsistentMatrix::InconsistentMatrix(int first, int second)
    : std::invalid_argument("inconsistent venues between ranks " + std::to_string(first) +
                            " and " + std::to_string(second) +
                            ": both entries name the same side"),
      first_(first),
      second_(second) {}

RankedVenueMatrix::RankedVenueMatrix(std::vector<std::vector<Venue>> rows) : rows_(std::move(rows)) {
  const int m = teams();
  if (m < 2) throw std::invalid_argument("venue matrix needs at least 2 teams");
  for (int t = 1; t <= m; ++t) {
    if (static_cast<int>(rows_[t - 1].size()) != m - 1) {
      throw std::invalid_argument("row " + std::to_string(t) + " has length " +
                                  std::to_string(rows_[t - 1].size()) + ", expected " +
                                  std::to_string(m - 1));
    }
  }
  for (int t = 1; t <= m; ++t) {
    for (int u = t + 1; u <= m; ++u) {
      if (venue(t, u) == venue(u, t)) throw InconsistentMatrix(t, u);
    }
  }
}

Venue RankedVenueMatrix::venue(int team, int opponent) const {
  if (team == opponent) throw std::invalid_argument("team has no venue against itself");
  return rows_.at(team - 1).at(ranked_position(team, opponent));
}

RankedVenueMatrix ranked_venue_matrix(const Schedule& schedule) {
  std::vector<std::vector<Venue>> rows;
  rows.reserve(schedule.teams());
  for (int t = 1; t <= schedule.teams(); ++t) rows.push_back(ranking_hap(schedule, t));
  return RankedVenueMatrix(std::move(rows));
}

}  // namespace rrfair
