#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rrfair/ranked_venue_matrix.hpp"
#include "rrfair/schedule.hpp"

namespace rrfair {

/// Syntax error in a text file. line() is 1-based; 0 means the whole input.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// "srr-schedule v1 n=<n>" then "<round> <home> <away>" per match, sorted.
std::string write_schedule(const Schedule& schedule);

/// Checks syntax and ranges only; round robin validity is verify_feasible's
/// job so callers can list every violation.
Schedule parse_schedule(std::string_view text);

enum class SymbolSet { ha, wb, numeric };  // H,A | W,B | 2H,1H

const char* to_string(SymbolSet symbols) noexcept;

struct VenueTable {
  SymbolSet symbols = SymbolSet::ha;
  std::vector<std::string> names;  // index rank-1
  RankedVenueMatrix matrix;

  friend bool operator==(const VenueTable&, const VenueTable&) = default;
};

// "ranked-venues v1 m=<m> symbols=<set>" then "<rank>,<name>,<venues>".
std::string write_venue_table(const VenueTable& table);

/// Rows may appear in any order but every rank 1..m exactly once. Mirror
/// conflicts surface as InconsistentMatrix.
VenueTable parse_venue_table(std::string_view text);

/// Venue string in the given symbol set. "2H"/"1H" tokens are two
/// characters each.
std::string encode_venues(std::span<const Venue> venues, SymbolSet symbols);
std::vector<Venue> decode_venues(std::string_view text, SymbolSet symbols);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace rrfair
