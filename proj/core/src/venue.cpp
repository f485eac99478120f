#include "rrfair/venue.hpp"

#include <stdexcept>

namespace rrfair {

std::vector<Venue> parse_venues(std::string_view text) {
  std::vector<Venue> out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == 'H') {
      out.push_back(Venue::home);
    } else if (c == 'A') {
      out.push_back(Venue::away);
    } else {
      throw std::invalid_argument("venue symbol must be H or A, got '" + std::string(1, c) + "'");
    }
  }
  return out;
}

std::string to_string(std::span<const Venue> venues) {
  std::string s;
  s.reserve(venues.size());
  for (Venue v : venues) s.push_back(to_char(v));
  return s;
}

std::vector<Venue> complement(std::span<const Venue> venues) {
  std::vector<Venue> out;
  out.reserve(venues.size());
  for (Venue v : venues) out.push_back(flip(v));
  return out;
}

HomeAwayPattern::HomeAwayPattern(std::vector<Venue> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("home-away pattern must not be empty");
}

HomeAwayPattern HomeAwayPattern::from_string(std::string_view text) {
  return HomeAwayPattern(parse_venues(text));
}

Venue HomeAwayPattern::at(int round) const {
  const int n = rounds();
  if (round < 0 || round > n) throw std::out_of_range("round out of range");
  return entries_[round == 0 ? n - 1 : round - 1];
}

HomeAwayPattern HomeAwayPattern::complement() const {
  return HomeAwayPattern(rrfair::complement(entries_));
}

std::vector<Break> breaks(const HomeAwayPattern& pattern) {
  std::vector<Break> out;
  for (int r = 1; r <= pattern.rounds(); ++r) {
    if (pattern.at(r - 1) == pattern.at(r)) out.push_back({r, pattern.at(r)});
  }
  return out;
}

}  // namespace rrfair
