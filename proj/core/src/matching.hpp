#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace rrfair::detail {

/// Removes every edge of a square bipartite graph that lies on no perfect
/// matching. adj[u] has bit v set for an edge between row u and column v.
/// Returns false, leaving adj unspecified, when no perfect matching exists.
class PerfectMatchingFilter {
 public:
  bool operator()(std::span<std::uint64_t> adj) {
    size_ = static_cast<int>(adj.size());
    adj_ = adj;
    if (!find_matching()) return false;
    prune();
    return true;
  }

 private:
  bool augment(int row, std::uint64_t& seen) {
    for (std::uint64_t cand = adj_[row] & ~seen; cand != 0; cand = adj_[row] & ~seen) {
      const int col = std::countr_zero(cand);
      seen |= std::uint64_t{1} << col;
      if (col_match_[col] < 0 || augment(col_match_[col], seen)) {
        col_match_[col] = row;
        row_match_[row] = col;
        return true;
      }
    }
    return false;
  }

  bool find_matching() {
    row_match_.assign(size_, -1);
    col_match_.assign(size_, -1);
    for (int row = 0; row < size_; ++row) {
      // Greedy first, then augmenting paths.
      const std::uint64_t free_cols = adj_[row] & ~taken_mask();
      if (free_cols != 0) {
        const int col = std::countr_zero(free_cols);
        col_match_[col] = row;
        row_match_[row] = col;
        continue;
      }
      std::uint64_t seen = 0;
      if (!augment(row, seen)) return false;
    }
    return true;
  }

  std::uint64_t taken_mask() const {
    std::uint64_t m = 0;
    for (int c = 0; c < size_; ++c)
      if (col_match_[c] >= 0) m |= std::uint64_t{1} << c;
    return m;
  }

  // Nodes 0..size-1 are rows, size..2size-1 columns. Unmatched edges run
  // row -> column, matched edges column -> row. An unmatched edge lies on a
  // perfect matching iff both ends share a strongly connected component.
  void prune() {
    const int nodes = 2 * size_;
    index_.assign(nodes, -1);
    low_.assign(nodes, 0);
    comp_.assign(nodes, -1);
    on_stack_.assign(nodes, false);
    stack_.clear();
    counter_ = 0;
    components_ = 0;
    for (int v = 0; v < nodes; ++v)
      if (index_[v] < 0) strongconnect(v);
    for (int row = 0; row < size_; ++row) {
      std::uint64_t keep = std::uint64_t{1} << row_match_[row];
      for (std::uint64_t m = adj_[row]; m != 0; m &= m - 1) {
        const int col = std::countr_zero(m);
        if (comp_[row] == comp_[size_ + col]) keep |= std::uint64_t{1} << col;
      }
      adj_[row] &= keep;
    }
  }

  void strongconnect(int v) {
    index_[v] = low_[v] = counter_++;
    stack_.push_back(v);
    on_stack_[v] = true;
    auto visit = [&](int w) {
      if (index_[w] < 0) {
        strongconnect(w);
        low_[v] = std::min(low_[v], low_[w]);
      } else if (on_stack_[w]) {
        low_[v] = std::min(low_[v], index_[w]);
      }
    };
    if (v < size_) {
      for (std::uint64_t m = adj_[v] & ~(std::uint64_t{1} << row_match_[v]); m != 0; m &= m - 1)
        visit(size_ + std::countr_zero(m));
    } else {
      visit(col_match_[v - size_]);
    }
    if (low_[v] == index_[v]) {
      int w;
      do {
        w = stack_.back();
        stack_.pop_back();
        on_stack_[w] = false;
        comp_[w] = components_;
      } while (w != v);
      ++components_;
    }
  }

  int size_ = 0;
  std::span<std::uint64_t> adj_;
  std::vector<int> row_match_;
  std::vector<int> col_match_;
  std::vector<int> index_;
  std::vector<int> low_;
  std::vector<int> comp_;
  std::vector<bool> on_stack_;
  std::vector<int> stack_;
  int counter_ = 0;
  int components_ = 0;
};

}  // namespace rrfair::detail
