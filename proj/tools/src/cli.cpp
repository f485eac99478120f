#include "rrfair/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "rrfair/construct.hpp"
#include "rrfair/datasets.hpp"
#include "rrfair/fairness.hpp"
#include "rrfair/hapset.hpp"
#include "rrfair/io.hpp"
#include "rrfair/solver.hpp"

namespace rrfair {

namespace {

// Thrown for conditions that map to a specific exit code.
struct Failure {
  int code;
  std::string message;
};

std::string render_f(const Rational& f) { return "F = " + f.to_decimal(3) + " (" + f.str() + ")"; }

std::string break_list(const std::vector<int>& rounds) {
  std::string s = "{";
  for (std::size_t i = 0; i < rounds.size(); ++i) s += (i ? "," : "") + std::to_string(rounds[i]);
  return s + "}";
}

Schedule load_schedule(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    throw Failure{exit_usage, e.what()};
  }
  try {
    return parse_schedule(text);
  } catch (const ParseError& e) {
    throw Failure{exit_usage, path + ": " + e.what()};
  }
}

void write_output(const std::string& path, std::string_view content) {
  try {
    write_file(path, content);
  } catch (const std::exception& e) {
    throw Failure{exit_usage, e.what()};
  }
}

// --- generate -------------------------------------------------------------

struct GenerateArgs {
  int n = 0;
  std::string method = "4k";
  std::string out;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  Schedule schedule = [&] {
    try {
      if (a.method == "4k") return construct_4k(a.n);
      if (a.method == "cps") return circle_schedule(a.n);
      if (a.n != 8) throw std::invalid_argument("cps8 method requires n = 8, got n=" + std::to_string(a.n));
      return cps_rankingfair_8();
    } catch (const std::invalid_argument& e) {
      throw Failure{exit_usage, e.what()};
    }
  }();
  write_output(a.out, write_schedule(schedule));
  out << "D=" << canonical_dseq(d_sequence(extract_haps(schedule))).str() << '\n';
  out << render_f(fairness_report(schedule).aggregate) << '\n';
  return exit_ok;
}

// --- verify ---------------------------------------------------------------

int cmd_verify(const std::string& path, std::ostream& out) {
  const Schedule schedule = load_schedule(path);
  const auto violations = verify_feasible(schedule);
  if (!violations.empty()) {
    out << "infeasible (" << violations.size() << " violation" << (violations.size() == 1 ? "" : "s") << ")\n";
    for (const Violation& v : violations) out << "  " << v.message() << '\n';
    return exit_negative;
  }

  const auto patterns = team_patterns(schedule);
  bool single = true;
  std::vector<int> all_breaks;
  std::ostringstream per_team;
  for (int t = 1; t <= schedule.teams(); ++t) {
    const auto bs = breaks(patterns[t - 1]);
    single = single && bs.size() == 1;
    per_team << "  team " << t << ":";
    if (bs.empty()) per_team << " none";
    for (const Break& b : bs) {
      per_team << ' ' << b.round << to_char(b.kind);
      all_breaks.push_back(b.round);
    }
    per_team << '\n';
  }
  std::sort(all_breaks.begin(), all_breaks.end());
  all_breaks.erase(std::unique(all_breaks.begin(), all_breaks.end()), all_breaks.end());

  std::string summary = "feasible";
  if (single) {
    summary += ", single-break";
    try {
      summary += ", D=" + canonical_dseq(d_sequence(HapSet(patterns))).str();
    } catch (const std::invalid_argument&) {
      summary += ", D=undefined";
    }
  } else {
    summary += ", not single-break";
  }
  const auto fair = is_ranking_fair(schedule);
  summary += fair.fair() ? ", ranking-fair" : ", not ranking-fair";

  out << summary << '\n';
  out << "break rounds: " << break_list(all_breaks) << '\n';
  out << "breaks per team (round, kind):\n" << per_team.str();
  if (fair.fair()) {
    out << "orientation: " << (fair.orientation == FairOrientation::table ? "team 1 hosts team 2" : "team 2 hosts team 1")
        << '\n';
  } else {
    out << "matches off the closest ranking-fair orientation: " << fair.violations.size() << '\n';
    for (const Match& m : fair.violations)
      out << "  round " << m.round << ": " << m.home << " hosts " << m.away << '\n';
  }
  out << render_f(fairness_report(schedule).aggregate) << '\n';
  return exit_ok;
}

// --- score ----------------------------------------------------------------

struct ScoreArgs {
  std::string input;
  bool per_team = false;
  std::string csv;
};

int cmd_score(const ScoreArgs& a, std::ostream& out) {
  std::string text;
  if (std::filesystem::exists(a.input)) {
    text = read_file(a.input);
  } else if (auto bundled = find_dataset(a.input)) {
    text = std::string(*bundled);
  } else {
    std::string names;
    for (const Dataset& d : bundled_datasets()) names += (names.empty() ? "" : ", ") + std::string(d.name);
    throw Failure{exit_usage, "no such file or bundled dataset: " + a.input + " (bundled: " + names + ")"};
  }

  FairnessReport report;
  std::vector<std::string> names;
  try {
    if (text.rfind("srr-schedule", 0) == 0) {
      const Schedule s = parse_schedule(text);
      const auto violations = verify_feasible(s);
      if (!violations.empty()) throw Failure{exit_negative, "infeasible schedule: " + violations.front().message()};
      report = fairness_report(s);
      for (int t = 1; t <= s.teams(); ++t) names.push_back("team " + std::to_string(t));
    } else {
      VenueTable table = parse_venue_table(text);
      report = fairness_report(table.matrix);
      names = std::move(table.names);
    }
  } catch (const InconsistentMatrix& e) {
    throw Failure{exit_negative, e.what()};
  } catch (const ParseError& e) {
    throw Failure{exit_usage, a.input + ": " + e.what()};
  }

  out << render_f(report.aggregate) << '\n';
  if (a.per_team) {
    std::size_t width = 4;
    for (const auto& n : names) width = std::max(width, n.size());
    for (const TeamFairness& tf : report.per_team) {
      out << std::setw(3) << tf.rank << "  " << std::left << std::setw(static_cast<int>(width)) << names[tf.rank - 1]
          << std::right << "  F_t = " << tf.f.to_decimal(3) << " (" << tf.f.str() << ")\n";
    }
  }
  if (!a.csv.empty()) {
    std::ostringstream csv;
    csv << "rank,name,F_t\n";
    for (const TeamFairness& tf : report.per_team) csv << tf.rank << ',' << names[tf.rank - 1] << ',' << tf.f.to_decimal(6) << '\n';
    csv << "all,aggregate," << report.aggregate.to_decimal(6) << '\n';
    write_output(a.csv, csv.str());
  }
  return exit_ok;
}

// --- solve ----------------------------------------------------------------

struct SolveArgs {
  std::string dseq;
  int n = 0;
  std::uint64_t nodes = SolveBudget{}.max_nodes;
  double seconds = SolveBudget{}.max_seconds;
  std::string out;
};

std::vector<int> parse_gap_list(const std::string& text) {
  std::vector<int> gaps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      gaps.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Failure{exit_usage, "malformed D-sequence entry '" + item + "'"};
    }
  }
  return gaps;
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  HapSet haps = [&] {
    try {
      return hapset_from_dseq(DSequence::for_teams(parse_gap_list(a.dseq), a.n), a.n);
    } catch (const std::invalid_argument& e) {
      throw Failure{exit_usage, e.what()};
    }
  }();
  const SolveResult r = solve_ranking_fair(haps, {a.nodes, a.seconds});
  out << to_string(r.status) << " (nodes=" << r.stats.nodes << ", failures=" << r.stats.failures << ")\n";
  err << "search time " << std::fixed << std::setprecision(3) << r.stats.seconds << " s\n";
  switch (r.status) {
    case SolveStatus::feasible:
      if (!a.out.empty()) write_output(a.out, write_schedule(*r.schedule));
      return exit_ok;
    case SolveStatus::infeasible:
      return exit_negative;
    case SolveStatus::unknown:
      return exit_unknown;
  }
  return exit_unknown;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ranking-fair round robin schedules: construct, verify, score, solve"};
  app.name("rrfair");
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Build a schedule and write it as a schedule file");
  generate->add_option("--n", gen.n, "Number of teams")->required();
  generate->add_option("--method", gen.method, "4k (ranking-fair, n = 4k), cps (circle method), cps8 (hand-made ranking-fair 8-team schedule)")
      ->check(CLI::IsMember({"4k", "cps", "cps8"}));
  generate->add_option("--out", gen.out, "Output path")->required();

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Check feasibility, breaks and ranking-fairness");
  verify->add_option("--schedule", verify_path, "Schedule file")->required();

  ScoreArgs sc;
  auto* score = app.add_subcommand("score", "Fairness F of a schedule or ranked venue matrix");
  score->add_option("--input", sc.input, "Path, or a bundled dataset: tata2002, danish2008, baseball2024")->required();
  score->add_flag("--per-team", sc.per_team, "Also print every F_t");
  score->add_option("--emit-csv", sc.csv, "Write rank,name,F_t rows to this path");

  SolveArgs sv;
  auto* solve = app.add_subcommand("solve", "Search a ranking-fair schedule for a single-break pattern set");
  solve->add_option("--dseq", sv.dseq, "Break gaps, e.g. 2,2,2,1")->required();
  solve->add_option("--n", sv.n, "Number of teams")->required();
  solve->add_option("--budget-nodes", sv.nodes, "Node limit")->capture_default_str();
  solve->add_option("--budget-seconds", sv.seconds, "Time limit")->capture_default_str();
  solve->add_option("--out", sv.out, "Write the witness schedule here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*generate) return cmd_generate(gen, out);
    if (*verify) return cmd_verify(verify_path, out);
    if (*score) return cmd_score(sc, out);
    return cmd_solve(sv, out, err);
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

}  // namespace rrfair
