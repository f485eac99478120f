#include "rrfair/solver.hpp"

#include <bit>
#include <chrono>
#include <set>
#include <stdexcept>
#include <string>

#include "matching.hpp"
#include "rrfair/construct.hpp"

namespace rrfair {

namespace {

using RankMask = std::uint64_t;  // bit k-1 <=> rank k
using SlotMask = std::uint64_t;

constexpr int kMaxSlots = 64;

int lowest(std::uint64_t m) noexcept { return std::countr_zero(m); }
int highest(std::uint64_t m) noexcept { return 63 - std::countl_zero(m); }
bool single(std::uint64_t m) noexcept { return m != 0 && (m & (m - 1)) == 0; }

/// Bits 0..b inclusive.
std::uint64_t up_to(int b) noexcept {
  return b >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (b + 1)) - 1;
}

struct BudgetExceeded {};

/// Search node: rank domain per slot and round domain per slot pair.
struct State {
  std::vector<RankMask> ranks;
  std::vector<RoundMask> rounds;  // row-major, kept symmetric
};

class Search {
 public:
  Search(const SolveInstance& instance, const SolveBudget& budget)
      : inst_(instance),
        n_(instance.slots()),
        budget_(budget),
        start_(std::chrono::steady_clock::now()) {}

  SolveResult run() {
    State root;
    root.ranks.resize(n_);
    root.rounds.assign(n_ * n_, 0);
    RankMask odd = 0;
    RankMask even = 0;
    for (int k = 1; k <= n_; ++k) (k % 2 == 1 ? odd : even) |= std::uint64_t{1} << (k - 1);
    for (int p = 0; p < n_; ++p) {
      root.ranks[p] = inst_.home_break[p] ? odd : even;
      for (int q = 0; q < n_; ++q) {
        if (p != q) root.rounds[p * n_ + q] = inst_.usable(p, q) | inst_.usable(q, p);
      }
    }

    SolveResult result;
    try {
      result.status = dfs(std::move(root)) ? SolveStatus::feasible : SolveStatus::infeasible;
    } catch (const BudgetExceeded&) {
      result.status = SolveStatus::unknown;
    }
    if (result.status == SolveStatus::feasible) {
      result.rank_of_slot = solution_ranks_;
      result.schedule = build_schedule();
    }
    result.stats = stats_;
    result.stats.seconds = elapsed();
    return result;
  }

 private:
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void charge_node() {
    ++stats_.nodes;
    if (stats_.nodes > budget_.max_nodes) throw BudgetExceeded{};
    if ((stats_.nodes & 0x3ff) == 0 && elapsed() > budget_.max_seconds) throw BudgetExceeded{};
  }

  RoundMask& pair(State& s, int p, int q) const { return s.rounds[p * n_ + q]; }

  void set_pair(State& s, int p, int q, RoundMask m) const {
    s.rounds[p * n_ + q] = m;
    s.rounds[q * n_ + p] = m;
  }

  /// Opponent slots of p per round: out[r] has bit q iff round r+1 is still
  /// possible for the pair {p, q}.
  void opponents(const State& s, int p, std::vector<SlotMask>& out) const {
    out.assign(inst_.rounds(), 0);
    for (int q = 0; q < n_; ++q) {
      if (q == p) continue;
      for (RoundMask m = s.rounds[p * n_ + q]; m != 0; m &= m - 1) {
        out[lowest(m)] |= SlotMask{1} << q;
      }
    }
  }

  /// Runs all rules to a fixpoint; false on a wipe-out.
  bool propagate(State& s) {
    while (true) {
      if (!propagate_local(s)) return false;
      bool changed = false;
      if (!filter_matchings(s, changed)) return false;
      if (!changed) return true;
    }
  }

  /// The pair variables of one slot take distinct rounds, and in one round
  /// the home side is matched perfectly to the away side. Drops values that
  /// appear in no perfect matching of either structure.
  bool filter_matchings(State& s, bool& changed) {
    const int rounds = inst_.rounds();
    std::vector<std::uint64_t> adj;
    for (int p = 0; p < n_; ++p) {
      adj.clear();
      for (int q = 0; q < n_; ++q)
        if (q != p) adj.push_back(pair(s, p, q));
      if (!matcher_(adj)) return false;
      int i = 0;
      for (int q = 0; q < n_; ++q) {
        if (q == p) continue;
        if (adj[i] != pair(s, p, q)) {
          set_pair(s, p, q, adj[i]);
          changed = true;
        }
        ++i;
      }
    }
    std::vector<int> home_side;
    std::vector<int> away_side;
    for (int r = 0; r < rounds; ++r) {
      home_side.clear();
      away_side.clear();
      for (int p = 0; p < n_; ++p)
        (inst_.haps[p].at(r + 1) == Venue::home ? home_side : away_side).push_back(p);
      if (home_side.size() != away_side.size()) return false;
      const RoundMask bit = RoundMask{1} << r;
      adj.assign(home_side.size(), 0);
      for (std::size_t i = 0; i < home_side.size(); ++i)
        for (std::size_t j = 0; j < away_side.size(); ++j)
          if (pair(s, home_side[i], away_side[j]) & bit) adj[i] |= std::uint64_t{1} << j;
      if (!matcher_(adj)) return false;
      for (std::size_t i = 0; i < home_side.size(); ++i) {
        for (std::size_t j = 0; j < away_side.size(); ++j) {
          RoundMask d = pair(s, home_side[i], away_side[j]);
          if ((d & bit) && !(adj[i] & (std::uint64_t{1} << j))) {
            d &= ~bit;
            if (d == 0) return false;
            set_pair(s, home_side[i], away_side[j], d);
            changed = true;
          }
        }
      }
    }
    return true;
  }

  bool propagate_local(State& s) {
    std::vector<SlotMask> opp;
    bool changed = true;
    while (changed) {
      changed = false;

      // Rank order <-> pair orientation.
      for (int p = 0; p < n_; ++p) {
        for (int q = p + 1; q < n_; ++q) {
          RoundMask d = pair(s, p, q);
          const RankMask rp = s.ranks[p];
          const RankMask rq = s.ranks[q];
          if (highest(rp) < lowest(rq))
            d &= inst_.usable(p, q);
          else if (highest(rq) < lowest(rp))
            d &= inst_.usable(q, p);
          if (d == 0) return false;
          if (d != pair(s, p, q)) {
            set_pair(s, p, q, d);
            changed = true;
          }
          int stronger = -1;
          int weaker = -1;
          if ((d & inst_.usable(q, p)) == 0) {
            stronger = p;
            weaker = q;
          } else if ((d & inst_.usable(p, q)) == 0) {
            stronger = q;
            weaker = p;
          }
          if (stronger >= 0) {
            const RankMask ns = s.ranks[stronger] & up_to(highest(s.ranks[weaker]) - 1);
            const RankMask nw = s.ranks[weaker] & ~up_to(lowest(s.ranks[stronger]));
            if (ns == 0 || nw == 0) return false;
            if (ns != s.ranks[stronger] || nw != s.ranks[weaker]) {
              s.ranks[stronger] = ns;
              s.ranks[weaker] = nw;
              changed = true;
            }
          }
        }
      }

      // Ranks form a permutation.
      RankMask fixed = 0;
      for (int p = 0; p < n_; ++p) {
        if (single(s.ranks[p])) {
          if (fixed & s.ranks[p]) return false;
          fixed |= s.ranks[p];
        }
      }
      for (int p = 0; p < n_; ++p) {
        if (!single(s.ranks[p]) && (s.ranks[p] & fixed)) {
          s.ranks[p] &= ~fixed;
          if (s.ranks[p] == 0) return false;
          changed = true;
        }
      }
      for (int k = 0; k < n_; ++k) {
        const RankMask bit = RankMask{1} << k;
        int holder = -1;
        int count = 0;
        for (int p = 0; p < n_ && count < 2; ++p) {
          if (s.ranks[p] & bit) {
            holder = p;
            ++count;
          }
        }
        if (count == 0) return false;
        if (count == 1 && s.ranks[holder] != bit) {
          s.ranks[holder] = bit;
          changed = true;
        }
      }

      // Every slot plays exactly one opponent per round.
      for (int p = 0; p < n_; ++p) {
        RoundMask taken = 0;
        for (int q = 0; q < n_; ++q) {
          if (q == p) continue;
          const RoundMask d = pair(s, p, q);
          if (single(d)) {
            if (taken & d) return false;
            taken |= d;
          }
        }
        for (int q = 0; q < n_; ++q) {
          if (q == p) continue;
          const RoundMask d = pair(s, p, q);
          if (!single(d) && (d & taken)) {
            const RoundMask nd = d & ~taken;
            if (nd == 0) return false;
            set_pair(s, p, q, nd);
            changed = true;
          }
        }
        opponents(s, p, opp);
        for (int r = 0; r < inst_.rounds(); ++r) {
          if (opp[r] == 0) return false;
          if (single(opp[r])) {
            const int q = lowest(opp[r]);
            const RoundMask bit = RoundMask{1} << r;
            if (pair(s, p, q) != bit) {
              set_pair(s, p, q, bit);
              changed = true;
            }
          }
        }
      }
    }
    return true;
  }

  bool dfs(State s) {
    charge_node();
    if (!propagate(s)) {
      ++stats_.failures;
      return false;
    }

    // Branch 1: give the strongest undecided rank to one of its candidates.
    for (int k = 0; k < n_; ++k) {
      const RankMask bit = RankMask{1} << k;
      SlotMask holders = 0;
      for (int p = 0; p < n_; ++p)
        if (s.ranks[p] & bit) holders |= SlotMask{1} << p;
      if (single(holders)) continue;
      for (SlotMask h = holders; h != 0; h &= h - 1) {
        State child = s;
        child.ranks[lowest(h)] = bit;
        if (dfs(std::move(child))) return true;
      }
      return false;
    }

    // Branch 2: ranks are fixed; pick the (slot, round) with fewest
    // remaining opponents.
    std::vector<SlotMask> opp;
    int best_p = -1;
    int best_r = -1;
    int best_count = kMaxSlots + 1;
    for (int p = 0; p < n_; ++p) {
      opponents(s, p, opp);
      for (int r = 0; r < inst_.rounds(); ++r) {
        const int c = std::popcount(opp[r]);
        if (c > 1 && c < best_count) {
          best_count = c;
          best_p = p;
          best_r = r;
        }
      }
    }
    if (best_p < 0) {
      record_solution(s);
      return true;
    }
    opponents(s, best_p, opp);
    for (SlotMask m = opp[best_r]; m != 0; m &= m - 1) {
      State child = s;
      set_pair(child, best_p, lowest(m), RoundMask{1} << best_r);
      if (dfs(std::move(child))) return true;
    }
    return false;
  }

  void record_solution(const State& s) {
    solution_ranks_.resize(n_);
    for (int p = 0; p < n_; ++p) solution_ranks_[p] = lowest(s.ranks[p]) + 1;
    solution_rounds_ = s.rounds;
  }

  Schedule build_schedule() const {
    std::vector<Match> matches;
    for (int p = 0; p < n_; ++p) {
      for (int q = p + 1; q < n_; ++q) {
        const int round = lowest(solution_rounds_[p * n_ + q]) + 1;
        const int tp = solution_ranks_[p];
        const int tq = solution_ranks_[q];
        if (inst_.haps[p].at(round) == Venue::home)
          matches.push_back({round, tp, tq});
        else
          matches.push_back({round, tq, tp});
      }
    }
    return Schedule(n_, std::move(matches));
  }

  const SolveInstance& inst_;
  int n_;
  SolveBudget budget_;
  std::chrono::steady_clock::time_point start_;
  SolveStats stats_;
  std::vector<int> solution_ranks_;
  std::vector<RoundMask> solution_rounds_;
  detail::PerfectMatchingFilter matcher_;
};

}  // namespace

std::vector<int> SolveInstance::usable_rounds(int p, int q) const {
  std::vector<int> out;
  for (RoundMask m = usable(p, q); m != 0; m &= m - 1) out.push_back(lowest(m) + 1);
  return out;
}

SolveInstance build_instance(const HapSet& haps) {
  const int n = haps.size();
  if (n > kMaxSlots) throw std::invalid_argument("solver supports at most 64 teams");
  if (!haps.is_single_break()) throw std::invalid_argument("solver needs a single-break HAP set");
  if (haps.rounds() != n - 1) {
    throw std::invalid_argument("HAP length " + std::to_string(haps.rounds()) +
                                " does not match " + std::to_string(n) + " teams");
  }
  const auto home = haps.home_break_slots();
  if (static_cast<int>(home.size()) * 2 != n) {
    throw std::invalid_argument("unbalanced HAP set: " + std::to_string(home.size()) +
                                " home-break patterns out of " + std::to_string(n));
  }

  SolveInstance inst{haps, std::vector<bool>(n, false), std::vector<RoundMask>(n * n, 0)};
  for (int p : home) inst.home_break[p] = true;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      // Equal break kinds means equal rank parity: the stronger side is away.
      const Venue stronger = inst.home_break[p] == inst.home_break[q] ? Venue::away : Venue::home;
      RoundMask m = 0;
      for (int r = 1; r < n; ++r) {
        if (haps[p].at(r) == stronger && haps[q].at(r) == flip(stronger))
          m |= RoundMask{1} << (r - 1);
      }
      inst.usable_[p * n + q] = m;
    }
  }
  return inst;
}

const char* to_string(SolveStatus status) noexcept {
  switch (status) {
    case SolveStatus::feasible: return "feasible";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::unknown: return "unknown";
  }
  return "unknown";
}

SolveResult solve_ranking_fair(const HapSet& haps, const SolveBudget& budget) {
  const SolveInstance inst = build_instance(haps);
  SolveResult result = Search(inst, budget).run();
  if (result.schedule) {
    if (!verify_feasible(*result.schedule).empty() || !is_ranking_fair(*result.schedule).fair())
      throw std::logic_error("solver produced an invalid witness");
  }
  return result;
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (parts < 1 || total < parts) return out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int left) -> void {
    if (left == 1) {
      current.push_back(remaining);
      out.push_back(current);
      current.pop_back();
      return;
    }
    for (int g = 1; g <= remaining - (left - 1); ++g) {
      current.push_back(g);
      self(self, remaining - g, left - 1);
      current.pop_back();
    }
  };
  rec(rec, total, parts);
  return out;
}

std::map<DSequence, DSequenceVerdict> solve_all_single_break(int n, const SolveBudget& budget) {
  if (n != 4 && n != 6) throw std::invalid_argument("exhaustive D-sequence sweep supports n in {4, 6}");
  std::set<DSequence> canonical;
  for (auto& gaps : compositions(n - 1, n / 2)) canonical.insert(canonical_dseq(DSequence(gaps)));

  std::map<DSequence, DSequenceVerdict> out;
  for (const DSequence& d : canonical) {
    DSequenceVerdict verdict;
    try {
      verdict.result = solve_ranking_fair(hapset_from_dseq(d, n), budget);
    } catch (const std::invalid_argument&) {
      verdict.degenerate = true;
      verdict.result.status = SolveStatus::infeasible;
    }
    out.emplace(d, std::move(verdict));
  }
  return out;
}

}  // namespace rrfair
