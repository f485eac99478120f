#include "rrfair/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace rrfair {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; });
}

int to_int(std::string_view token, int line, const char* what) {
  int value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size())
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(token) + "'");
  return value;
}

// Parses "<tag>=<int>" exactly.
int keyed_int(std::string_view token, std::string_view key, int line) {
  if (token.substr(0, key.size()) != key || token.size() <= key.size() || token[key.size()] != '=')
    throw ParseError(line, "expected " + std::string(key) + "=<int>, got '" + std::string(token) + "'");
  return to_int(token.substr(key.size() + 1), line, std::string(key).c_str());
}

}  // namespace

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

std::string write_schedule(const Schedule& schedule) {
  std::ostringstream out;
  out << "srr-schedule v1 n=" << schedule.teams() << '\n';
  for (const Match& m : schedule.matches()) out << m.round << ' ' << m.home << ' ' << m.away << '\n';
  return out.str();
}

Schedule parse_schedule(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input, expected header 'srr-schedule v1 n=<n>'");
  const auto header = split_ws(lines[0]);
  if (header.size() != 3 || header[0] != "srr-schedule" || header[1] != "v1")
    throw ParseError(1, "expected header 'srr-schedule v1 n=<n>'");
  const int n = keyed_int(header[2], "n", 1);
  if (n < 4 || n % 2 != 0) throw ParseError(1, "n must be even and >= 4, got " + std::to_string(n));

  std::vector<Match> matches;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    if (blank(lines[i])) continue;
    const auto tokens = split_ws(lines[i]);
    if (tokens.size() != 3) throw ParseError(lineno, "expected '<round> <home> <away>'");
    const Match m{to_int(tokens[0], lineno, "round"), to_int(tokens[1], lineno, "home"),
                  to_int(tokens[2], lineno, "away")};
    if (m.round < 1 || m.round > n - 1)
      throw ParseError(lineno, "round " + std::to_string(m.round) + " outside 1.." + std::to_string(n - 1));
    for (int team : {m.home, m.away})
      if (team < 1 || team > n)
        throw ParseError(lineno, "team " + std::to_string(team) + " outside 1.." + std::to_string(n));
    if (m.home == m.away) throw ParseError(lineno, "team " + std::to_string(m.home) + " plays itself");
    matches.push_back(m);
  }
  return Schedule(n, std::move(matches));
}

const char* to_string(SymbolSet symbols) noexcept {
  switch (symbols) {
    case SymbolSet::ha: return "H,A";
    case SymbolSet::wb: return "W,B";
    case SymbolSet::numeric: return "2H,1H";
  }
  return "?";
}

std::string encode_venues(std::span<const Venue> venues, SymbolSet symbols) {
  std::string out;
  for (Venue v : venues) {
    const bool h = v == Venue::home;
    switch (symbols) {
      case SymbolSet::ha: out += h ? 'H' : 'A'; break;
      case SymbolSet::wb: out += h ? 'W' : 'B'; break;
      case SymbolSet::numeric: out += h ? "2H" : "1H"; break;
    }
  }
  return out;
}

std::vector<Venue> decode_venues(std::string_view text, SymbolSet symbols) {
  std::vector<Venue> out;
  if (symbols == SymbolSet::numeric) {
    if (text.size() % 2 != 0) throw std::invalid_argument("2H/1H venue string has odd length");
    for (std::size_t i = 0; i < text.size(); i += 2) {
      const auto tok = text.substr(i, 2);
      if (tok == "2H") out.push_back(Venue::home);
      else if (tok == "1H") out.push_back(Venue::away);
      else throw std::invalid_argument("unknown venue token '" + std::string(tok) + "'");
    }
    return out;
  }
  const char home = symbols == SymbolSet::ha ? 'H' : 'W';
  const char away = symbols == SymbolSet::ha ? 'A' : 'B';
  for (char c : text) {
    if (c == home) out.push_back(Venue::home);
    else if (c == away) out.push_back(Venue::away);
    else throw std::invalid_argument(std::string("unknown venue symbol '") + c + "'");
  }
  return out;
}

std::string write_venue_table(const VenueTable& table) {
  std::ostringstream out;
  const int m = table.matrix.teams();
  out << "ranked-venues v1 m=" << m << " symbols=" << to_string(table.symbols) << '\n';
  for (int t = 1; t <= m; ++t) {
    out << t << ',' << table.names.at(t - 1) << ',' << encode_venues(table.matrix.row(t), table.symbols) << '\n';
  }
  return out.str();
}

VenueTable parse_venue_table(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input, expected header 'ranked-venues v1 m=<m> symbols=<set>'");
  const auto header = split_ws(lines[0]);
  if (header.size() != 4 || header[0] != "ranked-venues" || header[1] != "v1")
    throw ParseError(1, "expected header 'ranked-venues v1 m=<m> symbols=<set>'");
  const int m = keyed_int(header[2], "m", 1);
  if (m < 2) throw ParseError(1, "m must be >= 2");
  VenueTable table{SymbolSet::ha, {}, RankedVenueMatrix({{Venue::home}, {Venue::away}})};
  const std::string_view sym = header[3];
  if (sym == "symbols=H,A") table.symbols = SymbolSet::ha;
  else if (sym == "symbols=W,B") table.symbols = SymbolSet::wb;
  else if (sym == "symbols=2H,1H") table.symbols = SymbolSet::numeric;
  else throw ParseError(1, "unknown symbol set '" + std::string(sym) + "', expected H,A | W,B | 2H,1H");

  std::vector<std::vector<Venue>> rows(m);
  std::vector<std::string> names(m);
  std::vector<bool> seen(m, false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    const std::string_view line = lines[i];
    if (blank(line)) continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos || line.find(',', c2 + 1) != std::string_view::npos)
      throw ParseError(lineno, "expected '<rank>,<name>,<venues>'");
    const int rank = to_int(line.substr(0, c1), lineno, "rank");
    if (rank < 1 || rank > m) throw ParseError(lineno, "rank " + std::to_string(rank) + " outside 1.." + std::to_string(m));
    if (seen[rank - 1]) throw ParseError(lineno, "rank " + std::to_string(rank) + " listed twice");
    seen[rank - 1] = true;
    names[rank - 1] = std::string(line.substr(c1 + 1, c2 - c1 - 1));
    try {
      rows[rank - 1] = decode_venues(line.substr(c2 + 1), table.symbols);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
    if (static_cast<int>(rows[rank - 1].size()) != m - 1)
      throw ParseError(lineno, "rank " + std::to_string(rank) + " has " + std::to_string(rows[rank - 1].size()) +
                                   " venues, expected " + std::to_string(m - 1));
  }
  for (int t = 0; t < m; ++t)
    if (!seen[t]) throw ParseError(0, "rank " + std::to_string(t + 1) + " missing");
  table.names = std::move(names);
  table.matrix = RankedVenueMatrix(std::move(rows));
  return table;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace rrfair
