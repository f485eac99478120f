#include "rrfair/construct.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace rrfair {

int shifted_round(int i, int j, int n) {
  const int m = n - 1;
  const int v = ((n + 1 - i - j) % m + m) % m;
  return 1 + v;
}

namespace {

class RoundTable {
 public:
  explicit RoundTable(int n) : n_(n), cells_(n + 1, std::vector<int>(n + 1, 0)) {}

  int get(int i, int j) const {
    const int v = cells_[i][j];
    if (v == 0) {
      throw std::logic_error("round table cell (" + std::to_string(i) + "," + std::to_string(j) +
                             ") read before it was written");
    }
    return v;
  }

  void set(int i, int j, int round) {
    int& cell = cells_[i][j];
    if (cell != 0 && cell != round) {
      throw std::logic_error("round table cell (" + std::to_string(i) + "," + std::to_string(j) +
                             ") written as " + std::to_string(cell) + " and " +
                             std::to_string(round));
    }
    cell = round;
  }

  std::vector<std::vector<int>> symmetric() const {
    auto out = cells_;
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j) out[j][i] = out[i][j];
    return out;
  }

 private:
  int n_;
  std::vector<std::vector<int>> cells_;
};

}  // namespace

ConstructionTrace construct_4k_trace(int n) {
  if (n < 4 || n % 4 != 0) {
    throw std::invalid_argument("4k method requires n ≡ 0 mod 4, got n=" + std::to_string(n));
  }
  RoundTable table(n);
  const auto pi = [n](int i, int j) { return shifted_round(i, j, n); };

  for (int i = 1; i < n; i += 2) {
    if (i == n - 1) {
      table.set(n - 1, n, 3);
    } else if (i <= n / 2) {
      for (int j = i + 1; j < n; ++j) table.set(i, j, pi(i, j));
      table.set(i, n, pi(i, i));
    } else {
      for (int j = i + 2; j < n; ++j) table.set(i, j, pi(i, j));
      table.set(i, i + 1, pi(i, i));
      table.set(i, n, pi(i, i + 1));
    }
    // Even row below swaps the columns of each (odd, even) column pair.
    const int even = i + 1;
    for (int j = even + 1; j <= n; ++j) {
      table.set(even, j, j % 2 == 1 ? table.get(i, j + 1) : table.get(i, j - 1));
    }
  }

  ConstructionTrace trace;
  trace.teams = n;
  trace.round_table = table.symmetric();
  trace.break_rounds.push_back(1);
  for (int r = 4; r < n; r += 4) {
    trace.break_rounds.push_back(r - 1);
    trace.break_rounds.push_back(r);
  }
  trace.break_rounds.push_back(n - 1);
  return trace;
}

Schedule construct_4k(int n) {
  const ConstructionTrace trace = construct_4k_trace(n);
  std::vector<Match> matches;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int round = trace.round_table[i][j];
      if (expected_venue(i, j) == Venue::home)
        matches.push_back({round, i, j});
      else
        matches.push_back({round, j, i});
    }
  }
  return Schedule(n, std::move(matches));
}

HomeAwayPattern single_break_pattern(int rounds, int round, Venue kind) {
  if (rounds < 1 || rounds % 2 == 0) throw std::invalid_argument("pattern length must be odd");
  if (round < 1 || round > rounds) throw std::invalid_argument("break round out of range");
  // Alternate forward from the break round; after rounds-1 steps (an even
  // number) the entry before the break equals the break entry.
  std::vector<Venue> entries(rounds);
  Venue v = kind;
  for (int k = 0; k < rounds; ++k) {
    entries[(round - 1 + k) % rounds] = v;
    v = flip(v);
  }
  return HomeAwayPattern(std::move(entries));
}

HapSet hapset_from_dseq(const DSequence& d, int n) {
  const DSequence checked = DSequence::for_teams({d.gaps().begin(), d.gaps().end()}, n);
  std::vector<HomeAwayPattern> patterns;
  int round = 1;
  for (int gap : checked.gaps()) {
    patterns.push_back(single_break_pattern(n - 1, round, Venue::home));
    patterns.push_back(single_break_pattern(n - 1, round, Venue::away));
    round += gap;
  }
  // HapSet rejects duplicates.
  return HapSet(std::move(patterns));
}

HapSet cps_hapset(int n) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("canonical pattern set requires even n >= 4, got n=" +
                                std::to_string(n));
  }
  std::vector<int> gaps(n / 2, 2);
  gaps.back() = 1;
  return hapset_from_dseq(DSequence(std::move(gaps)), n);
}

Schedule circle_schedule(int n) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("circle method requires even n >= 4, got n=" + std::to_string(n));
  }
  const int m = n - 1;
  // Seats 0..m-1 rotate, team n is fixed. Seat s holds team s+1.
  std::vector<Match> matches;
  for (int r = 0; r < m; ++r) {
    const int rotating = r + 1;
    if (r % 2 == 0)
      matches.push_back({r + 1, n, rotating});
    else
      matches.push_back({r + 1, rotating, n});
    for (int k = 1; k < n / 2; ++k) {
      const int up = (r + k) % m + 1;
      const int down = ((r - k) % m + m) % m + 1;
      if (k % 2 == 1)
        matches.push_back({r + 1, down, up});
      else
        matches.push_back({r + 1, up, down});
    }
  }
  return Schedule(n, std::move(matches));
}

Schedule cps_rankingfair_8() {
  // home team listed first
  static constexpr int kRounds[7][4][2] = {
      {{5, 1}, {2, 3}, {8, 4}, {6, 7}},
      {{1, 6}, {4, 2}, {3, 8}, {7, 5}},
      {{1, 8}, {2, 7}, {5, 3}, {6, 4}},
      {{7, 1}, {8, 2}, {3, 6}, {4, 5}},
      {{1, 4}, {6, 2}, {7, 3}, {5, 8}},
      {{3, 1}, {2, 5}, {4, 7}, {8, 6}},
      {{1, 2}, {3, 4}, {5, 6}, {7, 8}},
  };
  std::vector<Match> matches;
  for (int r = 0; r < 7; ++r)
    for (const auto& game : kRounds[r]) matches.push_back({r + 1, game[0], game[1]});
  return Schedule(8, std::move(matches));
}

DSequence family_dseq_4k2(int n) {
  if (n % 4 != 2 || n < 18) {
    throw std::invalid_argument("4k+2 family requires n ≡ 2 mod 4 and n >= 18, got n=" +
                                std::to_string(n));
  }
  const int base = n / 2 - 5;  // even, >= 4
  const int i = (base + 3) / 4;
  const int j = base / 4;
  std::vector<int> gaps = {2, 2, 1, 2};
  for (int k = 0; k < i; ++k) {
    gaps.push_back(3);
    gaps.push_back(1);
  }
  gaps.push_back(2);
  for (int k = 0; k < j; ++k) {
    gaps.push_back(1);
    gaps.push_back(3);
  }
  return DSequence::for_teams(std::move(gaps), n);
}

}  // namespace rrfair
