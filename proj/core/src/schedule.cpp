#include "rrfair/schedule.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rrfair {

Schedule::Schedule(int teams, std::vector<Match> matches)
    : teams_(teams), matches_(std::move(matches)) {
  if (teams_ < 4 || teams_ % 2 != 0) {
    throw std::invalid_argument("team count must be even and at least 4, got " +
                                std::to_string(teams_));
  }
  for (const Match& m : matches_) {
    if (m.round < 1 || m.round > rounds())
      throw std::invalid_argument("round " + std::to_string(m.round) + " out of range");
    if (m.home < 1 || m.home > teams_ || m.away < 1 || m.away > teams_)
      throw std::invalid_argument("team rank out of range in round " + std::to_string(m.round));
    if (m.home == m.away)
      throw std::invalid_argument("team " + std::to_string(m.home) + " cannot play itself");
  }
  std::sort(matches_.begin(), matches_.end());
}

std::vector<Match> Schedule::round(int r) const {
  std::vector<Match> out;
  for (const Match& m : matches_)
    if (m.round == r) out.push_back(m);
  return out;
}

std::optional<Match> Schedule::find(int i, int j) const {
  for (const Match& m : matches_)
    if ((m.home == i && m.away == j) || (m.home == j && m.away == i)) return m;
  return std::nullopt;
}

Schedule Schedule::complement() const {
  std::vector<Match> flipped;
  flipped.reserve(matches_.size());
  for (const Match& m : matches_) flipped.push_back({m.round, m.away, m.home});
  return Schedule(teams_, std::move(flipped));
}

std::string Violation::message() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::duplicate_team_in_round:
      os << "duplicate team in round " << round << ": team " << team;
      break;
    case Kind::team_missing_in_round:
      os << "team " << team << " does not play in round " << round;
      break;
    case Kind::pair_repeated:
      os << "pair {" << team << "," << other << "} scheduled twice";
      break;
    case Kind::pair_missing:
      os << "pair {" << team << "," << other << "} never scheduled";
      break;
  }
  return os.str();
}

std::vector<Violation> verify_feasible(const Schedule& schedule) {
  const int n = schedule.teams();
  std::vector<Violation> out;
  // appearances[r][t]
  std::vector<std::vector<int>> appearances(n, std::vector<int>(n + 1, 0));
  std::vector<std::vector<int>> meetings(n + 1, std::vector<int>(n + 1, 0));
  for (const Match& m : schedule.matches()) {
    ++appearances[m.round][m.home];
    ++appearances[m.round][m.away];
    const int lo = std::min(m.home, m.away);
    const int hi = std::max(m.home, m.away);
    ++meetings[lo][hi];
  }
  for (int r = 1; r < n; ++r) {
    for (int t = 1; t <= n; ++t) {
      if (appearances[r][t] > 1)
        out.push_back({Violation::Kind::duplicate_team_in_round, r, t, 0});
      else if (appearances[r][t] == 0)
        out.push_back({Violation::Kind::team_missing_in_round, r, t, 0});
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (meetings[i][j] > 1) out.push_back({Violation::Kind::pair_repeated, 0, i, j});
      else if (meetings[i][j] == 0) out.push_back({Violation::Kind::pair_missing, 0, i, j});
    }
  }
  return out;
}

Venue expected_venue(int i, int j) {
  if (i == j) throw std::invalid_argument("invalid pair: team " + std::to_string(i) + " twice");
  if (i < 1 || j < 1) throw std::invalid_argument("invalid pair: ranks start at 1");
  const bool stronger = i < j;
  const bool same_parity = (i - j) % 2 == 0;
  // Same parity: stronger team away. Different parity: stronger team home.
  return (stronger == same_parity) ? Venue::away : Venue::home;
}

RankingFairVerdict is_ranking_fair(const Schedule& schedule) {
  std::vector<Match> against_table;
  std::vector<Match> against_complement;
  for (const Match& m : schedule.matches()) {
    if (expected_venue(m.home, m.away) == Venue::home)
      against_complement.push_back(m);
    else
      against_table.push_back(m);
  }
  RankingFairVerdict verdict;
  if (against_table.empty()) {
    verdict.orientation = FairOrientation::table;
  } else if (against_complement.empty()) {
    verdict.orientation = FairOrientation::complement;
  } else {
    verdict.violations = against_table.size() <= against_complement.size()
                             ? std::move(against_table)
                             : std::move(against_complement);
  }
  return verdict;
}

std::vector<Venue> ranking_hap(const Schedule& schedule, int team) {
  const int n = schedule.teams();
  if (team < 1 || team > n) throw std::out_of_range("team " + std::to_string(team) + " out of range");
  std::vector<int> seen(n + 1, 0);
  std::vector<Venue> row(n + 1, Venue::home);
  for (const Match& m : schedule.matches()) {
    if (m.home == team) {
      row[m.away] = Venue::home;
      ++seen[m.away];
    } else if (m.away == team) {
      row[m.home] = Venue::away;
      ++seen[m.home];
    }
  }
  std::vector<Venue> out;
  out.reserve(n - 1);
  for (int u = 1; u <= n; ++u) {
    if (u == team) continue;
    if (seen[u] != 1) {
      throw std::invalid_argument("teams " + std::to_string(team) + " and " + std::to_string(u) +
                                  " meet " + std::to_string(seen[u]) + " times");
    }
    out.push_back(row[u]);
  }
  return out;
}

std::vector<HomeAwayPattern> team_patterns(const Schedule& schedule) {
  const int n = schedule.teams();
  std::vector<std::vector<Venue>> entries(n, std::vector<Venue>(n - 1, Venue::home));
  std::vector<std::vector<int>> seen(n, std::vector<int>(n - 1, 0));
  for (const Match& m : schedule.matches()) {
    entries[m.home - 1][m.round - 1] = Venue::home;
    entries[m.away - 1][m.round - 1] = Venue::away;
    ++seen[m.home - 1][m.round - 1];
    ++seen[m.away - 1][m.round - 1];
  }
  std::vector<HomeAwayPattern> out;
  out.reserve(n);
  for (int t = 0; t < n; ++t) {
    for (int r = 0; r < n - 1; ++r) {
      if (seen[t][r] != 1) {
        throw std::invalid_argument("team " + std::to_string(t + 1) + " plays " +
                                    std::to_string(seen[t][r]) + " games in round " +
                                    std::to_string(r + 1));
      }
    }
    out.emplace_back(std::move(entries[t]));
  }
  return out;
}

}  // namespace rrfair
