#pragma once

#include <string>
#include <vector>

#include "rrfair/venue.hpp"

namespace rrfair::test {

// Every H/A row of the given length; bit k of the index is position k.
inline std::vector<std::vector<Venue>> all_rows(int length) {
  std::vector<std::vector<Venue>> rows;
  for (unsigned bits = 0; bits < (1u << length); ++bits) {
    std::vector<Venue> row(length);
    for (int k = 0; k < length; ++k) row[k] = (bits >> k) & 1u ? Venue::home : Venue::away;
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<Venue> row(const std::string& s) { return parse_venues(s); }

}  // namespace rrfair::test
