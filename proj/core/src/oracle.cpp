#include "rrfair/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace rrfair::oracle {

namespace {

struct Edge {
  int a;
  int b;
};

class Enumerator {
 public:
  Enumerator(const EnumerationScope& scope, const ScheduleSink* sink)
      : scope_(scope), sink_(sink), n_(scope.teams) {
    if (n_ != 4 && n_ != 6) throw std::invalid_argument("schedule enumeration supports n in {4, 6}");
    used_.assign(n_ * n_, false);
    rounds_.resize(n_ - 1);
    if (scope_.haps) {
      target_ = *scope_.haps;
      std::sort(target_.begin(), target_.end());
    }
  }

  EnumerationStats run() {
    factorize(0);
    return stats_;
  }

 private:
  // Round-labelled 1-factorizations: each round is a perfect matching on the
  // edges not used by earlier rounds.
  void factorize(int round) {
    if (stopped_) return;
    if (round == n_ - 1) {
      ++stats_.factorizations;
      orient_all();
      return;
    }
    std::vector<bool> matched(n_, false);
    complete_round(round, matched);
  }

  void complete_round(int round, std::vector<bool>& matched) {
    const auto first = std::find(matched.begin(), matched.end(), false);
    if (first == matched.end()) {
      factorize(round + 1);
      return;
    }
    const int a = static_cast<int>(first - matched.begin());
    matched[a] = true;
    for (int b = a + 1; b < n_ && !stopped_; ++b) {
      if (matched[b] || used_[a * n_ + b]) continue;
      matched[b] = true;
      used_[a * n_ + b] = true;
      rounds_[round].push_back({a, b});
      complete_round(round, matched);
      rounds_[round].pop_back();
      used_[a * n_ + b] = false;
      matched[b] = false;
    }
    matched[a] = false;
  }

  void orient_all() {
    edges_.clear();
    edge_round_.clear();
    for (int r = 0; r < n_ - 1; ++r) {
      for (const Edge& e : rounds_[r]) {
        edges_.push_back(e);
        edge_round_.push_back(r);
      }
    }
    // hap_[t][r]: 0 unknown, 1 home, 2 away. rank_[t][u]: t's venue vs u.
    hap_.assign(n_, std::vector<int>(n_ - 1, 0));
    rank_.assign(n_, std::vector<int>(n_, 0));
    orient(0);
  }

  bool alternation_ok(int t, int u) const {
    // Neighbours of u in t's opponent order.
    const auto next_opponent = [&](int from, int step) {
      int v = from + step;
      if (v == t) v += step;
      return v;
    };
    for (int step : {-1, 1}) {
      const int v = next_opponent(u, step);
      if (v < 0 || v >= n_) continue;
      if (rank_[t][v] != 0 && rank_[t][v] == rank_[t][u]) return false;
    }
    return true;
  }

  bool prefix_single_break_ok(int t, int r) const {
    // Breaks between consecutive known rounds up to r (non-circular part).
    int count = 0;
    for (int k = 1; k <= r; ++k) {
      if (hap_[t][k] != 0 && hap_[t][k - 1] != 0 && hap_[t][k] == hap_[t][k - 1]) ++count;
    }
    return count <= 1;
  }

  void orient(std::size_t i) {
    if (stopped_) return;
    if (i == edges_.size()) {
      finish();
      return;
    }
    const Edge e = edges_[i];
    const int r = edge_round_[i];
    for (int home_side = 0; home_side < 2 && !stopped_; ++home_side) {
      const int home = home_side == 0 ? e.a : e.b;
      const int away = home_side == 0 ? e.b : e.a;
      hap_[home][r] = 1;
      hap_[away][r] = 2;
      rank_[home][away] = 1;
      rank_[away][home] = 2;
      bool ok = true;
      if (scope_.single_break) ok = prefix_single_break_ok(home, r) && prefix_single_break_ok(away, r);
      if (ok && scope_.ranking_fair) ok = alternation_ok(home, away) && alternation_ok(away, home);
      if (ok) orient(i + 1);
      hap_[home][r] = 0;
      hap_[away][r] = 0;
      rank_[home][away] = 0;
      rank_[away][home] = 0;
    }
  }

  std::vector<Venue> venues_of(int t) const {
    std::vector<Venue> v;
    for (int x : hap_[t]) v.push_back(x == 1 ? Venue::home : Venue::away);
    return v;
  }

  void finish() {
    if (scope_.single_break) {
      for (int t = 0; t < n_; ++t)
        if (naive_break_count(venues_of(t)) != 1) return;
    }
    if (scope_.haps) {
      std::vector<HomeAwayPattern> mine;
      for (int t = 0; t < n_; ++t) mine.emplace_back(venues_of(t));
      std::sort(mine.begin(), mine.end());
      if (mine != target_) return;
    }
    ++stats_.schedules;
    if (sink_ == nullptr) return;
    std::vector<Match> matches;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge e = edges_[i];
      const int r = edge_round_[i];
      if (hap_[e.a][r] == 1)
        matches.push_back({r + 1, e.a + 1, e.b + 1});
      else
        matches.push_back({r + 1, e.b + 1, e.a + 1});
    }
    if (!(*sink_)(Schedule(n_, std::move(matches)))) stopped_ = true;
  }

  const EnumerationScope& scope_;
  const ScheduleSink* sink_;
  int n_;
  std::vector<bool> used_;
  std::vector<std::vector<Edge>> rounds_;
  std::vector<Edge> edges_;
  std::vector<int> edge_round_;
  std::vector<std::vector<int>> hap_;
  std::vector<std::vector<int>> rank_;
  std::vector<HomeAwayPattern> target_;
  EnumerationStats stats_;
  bool stopped_ = false;
};

}  // namespace

EnumerationStats enumerate_schedules(const EnumerationScope& scope, const ScheduleSink& sink) {
  return Enumerator(scope, &sink).run();
}

EnumerationStats count_schedules(const EnumerationScope& scope) {
  return Enumerator(scope, nullptr).run();
}

Rational naive_delta(std::span<const Venue> row) {
  const int len = static_cast<int>(row.size());
  if (len < 2) throw std::invalid_argument("ranked venue row needs at least 2 entries");
  Rational total;
  for (int i = 0; i < len; ++i) {
    for (int j = i + 1; j < len; ++j) {
      int home = 0;
      for (int k = i; k <= j; ++k)
        if (row[k] == Venue::home) ++home;
      total += abs(Rational(home) - Rational(j - i + 1, 2));
    }
  }
  return total;
}

std::vector<int> naive_canonical(std::span<const int> gaps) {
  const std::vector<int> forward(gaps.begin(), gaps.end());
  const std::vector<int> backward(gaps.rbegin(), gaps.rend());
  std::vector<std::vector<int>> candidates;
  for (const auto* seq : {&forward, &backward}) {
    for (std::size_t s = 0; s < seq->size(); ++s) {
      std::vector<int> c(seq->begin() + s, seq->end());
      c.insert(c.end(), seq->begin(), seq->begin() + s);
      candidates.push_back(std::move(c));
    }
  }
  return *std::max_element(candidates.begin(), candidates.end());
}

int naive_break_count(std::span<const Venue> pattern) {
  const std::size_t len = pattern.size();
  int count = 0;
  for (std::size_t r = 0; r < len; ++r) {
    const Venue prev = pattern[(r + len - 1) % len];
    if (prev == pattern[r]) ++count;
  }
  return count;
}

bool naive_ranking_fair(const Schedule& schedule) {
  const int n = schedule.teams();
  std::vector<std::vector<int>> venue(n + 1, std::vector<int>(n + 1, 0));
  for (const Match& m : schedule.matches()) {
    venue[m.home][m.away] = 1;
    venue[m.away][m.home] = 2;
  }
  for (int t = 1; t <= n; ++t) {
    int previous = 0;
    for (int u = 1; u <= n; ++u) {
      if (u == t) continue;
      if (venue[t][u] == 0 || venue[t][u] == previous) return false;
      previous = venue[t][u];
    }
  }
  return true;
}

}  // namespace rrfair::oracle
