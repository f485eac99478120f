#include "rrfair/hapset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace rrfair {

HapSet::HapSet(std::vector<HomeAwayPattern> patterns) : patterns_(std::move(patterns)) {
  if (patterns_.empty()) throw std::invalid_argument("HAP set must not be empty");
  const int len = patterns_.front().rounds();
  for (const auto& p : patterns_) {
    if (p.rounds() != len) throw std::invalid_argument("HAPs must have equal length");
  }
  std::set<HomeAwayPattern> distinct(patterns_.begin(), patterns_.end());
  if (distinct.size() != patterns_.size()) {
    throw std::invalid_argument("HAP set contains duplicate patterns");
  }
}

bool HapSet::is_single_break() const {
  return std::all_of(patterns_.begin(), patterns_.end(),
                     [](const HomeAwayPattern& p) { return breaks(p).size() == 1; });
}

bool HapSet::is_complementary() const {
  std::set<HomeAwayPattern> all(patterns_.begin(), patterns_.end());
  return std::all_of(patterns_.begin(), patterns_.end(),
                     [&](const HomeAwayPattern& p) { return all.contains(p.complement()); });
}

namespace {

std::vector<int> slots_with_break(std::span<const HomeAwayPattern> patterns, Venue kind) {
  std::vector<int> out;
  for (int s = 0; s < static_cast<int>(patterns.size()); ++s) {
    const auto b = breaks(patterns[s]);
    if (b.size() == 1 && b.front().kind == kind) out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<int> HapSet::home_break_slots() const {
  return slots_with_break(patterns_, Venue::home);
}

std::vector<int> HapSet::away_break_slots() const {
  return slots_with_break(patterns_, Venue::away);
}

std::vector<HomeAwayPattern> HapSet::sorted() const {
  std::vector<HomeAwayPattern> out = patterns_;
  std::sort(out.begin(), out.end());
  return out;
}

HapSet extract_haps(const Schedule& schedule) { return HapSet(team_patterns(schedule)); }

DSequence::DSequence(std::vector<int> gaps) : gaps_(std::move(gaps)) {
  if (gaps_.empty()) throw std::invalid_argument("D-sequence must not be empty");
  for (int g : gaps_) {
    if (g < 1) throw std::invalid_argument("D-sequence gaps must be positive");
  }
}

DSequence DSequence::for_teams(std::vector<int> gaps, int teams) {
  DSequence d(std::move(gaps));
  if (teams < 2 || teams % 2 != 0) throw std::invalid_argument("team count must be even");
  if (d.size() != teams / 2) {
    throw std::invalid_argument("D-sequence for n=" + std::to_string(teams) + " needs " +
                                std::to_string(teams / 2) + " gaps, got " +
                                std::to_string(d.size()));
  }
  if (d.sum() != teams - 1) {
    throw std::invalid_argument("D-sequence for n=" + std::to_string(teams) +
                                " must sum to " + std::to_string(teams - 1) + ", got " +
                                std::to_string(d.sum()));
  }
  return d;
}

DSequence DSequence::from_break_rounds(std::span<const int> rounds, int teams) {
  std::vector<int> sorted(rounds.begin(), rounds.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty()) throw std::invalid_argument("no break rounds");
  std::vector<int> gaps;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) gaps.push_back(sorted[i + 1] - sorted[i]);
  gaps.push_back(sorted.front() + teams - 1 - sorted.back());
  return for_teams(std::move(gaps), teams);
}

int DSequence::sum() const noexcept { return std::accumulate(gaps_.begin(), gaps_.end(), 0); }

std::string DSequence::str() const {
  const bool wide = std::any_of(gaps_.begin(), gaps_.end(), [](int g) { return g >= 10; });
  std::string s;
  for (std::size_t i = 0; i < gaps_.size(); ++i) {
    if (wide && i > 0) s.push_back(',');
    s += std::to_string(gaps_[i]);
  }
  return s;
}

DSequence d_sequence(const HapSet& haps) {
  const int n = haps.size();
  // home/away break count per round
  std::vector<int> home(haps.rounds() + 1, 0);
  std::vector<int> away(haps.rounds() + 1, 0);
  for (const auto& p : haps.patterns()) {
    const auto b = breaks(p);
    if (b.size() != 1) {
      throw std::invalid_argument("pattern " + p.str() + " has " + std::to_string(b.size()) +
                                  " breaks; D-sequence needs a single-break set");
    }
    ++(b.front().kind == Venue::home ? home : away)[b.front().round];
  }
  std::vector<int> rounds;
  for (int r = 1; r <= haps.rounds(); ++r) {
    if (home[r] == 0 && away[r] == 0) continue;
    if (home[r] != 1 || away[r] != 1) {
      throw std::invalid_argument("break round " + std::to_string(r) +
                                  " is not shared by one home and one away break");
    }
    rounds.push_back(r);
  }
  return DSequence::from_break_rounds(rounds, n);
}

DSequence canonical_dseq(const DSequence& d) {
  const auto gaps = d.gaps();
  const std::size_t k = gaps.size();
  std::vector<int> best(gaps.begin(), gaps.end());
  std::vector<int> candidate(k);
  for (int direction = 0; direction < 2; ++direction) {
    for (std::size_t start = 0; start < k; ++start) {
      for (std::size_t i = 0; i < k; ++i) {
        candidate[i] = direction == 0 ? gaps[(start + i) % k] : gaps[(start + k - i) % k];
      }
      if (candidate > best) best = candidate;
    }
  }
  return DSequence(std::move(best));
}

}  // namespace rrfair
