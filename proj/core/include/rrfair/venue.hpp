#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rrfair {

/// Which side of a match holds the asymmetry (home ground, white pieces,
/// batting last, ...).
enum class Venue : std::uint8_t { home, away };

constexpr Venue flip(Venue v) noexcept {
  return v == Venue::home ? Venue::away : Venue::home;
}

constexpr char to_char(Venue v) noexcept { return v == Venue::home ? 'H' : 'A'; }

/// Parses a string of 'H'/'A' symbols. Throws std::invalid_argument on any
/// other character.
std::vector<Venue> parse_venues(std::string_view text);
std::string to_string(std::span<const Venue> venues);

std::vector<Venue> complement(std::span<const Venue> venues);

/// Circular home-away pattern of one team over rounds 1..n-1.
///
/// Round 0 is an alias for round n-1, so `at(r - 1)` is always defined for
/// r in 1..n-1.
class HomeAwayPattern {
 public:
  HomeAwayPattern() = default;
  explicit HomeAwayPattern(std::vector<Venue> entries);
  static HomeAwayPattern from_string(std::string_view text);

  int rounds() const noexcept { return static_cast<int>(entries_.size()); }

  /// Venue in round r, 0 <= r <= rounds().
  Venue at(int round) const;

  std::span<const Venue> entries() const noexcept { return entries_; }
  HomeAwayPattern complement() const;
  std::string str() const { return to_string(entries_); }

  friend auto operator<=>(const HomeAwayPattern&, const HomeAwayPattern&) = default;
  friend bool operator==(const HomeAwayPattern&, const HomeAwayPattern&) = default;

 private:
  std::vector<Venue> entries_;
};

struct Break {
  int round = 0;
  Venue kind = Venue::home;
  friend bool operator==(const Break&, const Break&) = default;
};

/// Rounds r with h_{r-1} == h_r, taken circularly. Sorted by round.
std::vector<Break> breaks(const HomeAwayPattern& pattern);

}  // namespace rrfair
