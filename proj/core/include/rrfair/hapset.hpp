#pragma once

#include <span>
#include <string>
#include <vector>

#include "rrfair/schedule.hpp"
#include "rrfair/venue.hpp"

namespace rrfair {

/// A collection of pairwise distinct HAPs of equal length. When obtained from
/// a schedule, pattern t-1 belongs to team t; otherwise indices are slots
/// not yet bound to teams.
class HapSet {
 public:
  explicit HapSet(std::vector<HomeAwayPattern> patterns);

  int size() const noexcept { return static_cast<int>(patterns_.size()); }
  int rounds() const noexcept { return patterns_.empty() ? 0 : patterns_.front().rounds(); }
  const HomeAwayPattern& operator[](int slot) const { return patterns_.at(slot); }
  std::span<const HomeAwayPattern> patterns() const noexcept { return patterns_; }

  bool is_single_break() const;
  bool is_complementary() const;

  /// Slots whose single break is a home break (resp. away break). Only
  /// meaningful for single-break sets.
  std::vector<int> home_break_slots() const;
  std::vector<int> away_break_slots() const;

  /// Patterns sorted lexicographically; equal for sets that differ only in
  /// slot order.
  std::vector<HomeAwayPattern> sorted() const;

 private:
  std::vector<HomeAwayPattern> patterns_;
};

HapSet extract_haps(const Schedule& schedule);

/// Gaps between consecutive break rounds of a single-break HAP set.
class DSequence {
 public:
  /// Gaps must be positive.
  explicit DSequence(std::vector<int> gaps);
  /// Additionally requires n/2 gaps summing to n-1.
  static DSequence for_teams(std::vector<int> gaps, int teams);
  static DSequence from_break_rounds(std::span<const int> rounds, int teams);

  std::span<const int> gaps() const noexcept { return gaps_; }
  int size() const noexcept { return static_cast<int>(gaps_.size()); }
  int sum() const noexcept;
  /// Compact form, e.g. "2221"; gaps >= 10 are comma separated.
  std::string str() const;

  friend auto operator<=>(const DSequence&, const DSequence&) = default;
  friend bool operator==(const DSequence&, const DSequence&) = default;

 private:
  std::vector<int> gaps_;
};

/// D-sequence of a single-break HAP set. Throws std::invalid_argument when a
/// pattern has more than one break or a break round is not shared by exactly
/// one home break and one away break.
DSequence d_sequence(const HapSet& haps);

/// Lexicographically largest rotation of the sequence or of its reversal.
DSequence canonical_dseq(const DSequence& d);

}  // namespace rrfair
