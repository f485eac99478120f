#pragma once

#include <vector>

#include "rrfair/hapset.hpp"
#include "rrfair/schedule.hpp"

namespace rrfair {

/// 1 + ((n + 1 - i - j) mod (n - 1)): row i of the n = 4k round table is a
/// circular shift of (n-1, n-2, ..., 1).
int shifted_round(int i, int j, int n);

/// Intermediate data of the n = 4k construction.
struct ConstructionTrace {
  int teams = 0;
  /// round_table[i][j] = round of the i-j game (1-based, 0 on the diagonal).
  std::vector<std::vector<int>> round_table;
  /// Break rounds claimed for the construction: 1, 3, 4, 7, 8, ..., n-1.
  std::vector<int> break_rounds;
};

/// Fills the round table row by row: odd rows from circular shifts, even rows
/// by swapping adjacent columns of the row above, S(n-1, n) = 3, lower
/// triangle by symmetry. Throws std::invalid_argument unless n is a positive
/// multiple of 4, and std::logic_error if a cell is written twice with
/// different rounds.
ConstructionTrace construct_4k_trace(int n);

/// Ranking-fair, single-break schedule for n = 4k with team 1 hosting team 2.
Schedule construct_4k(int n);

/// Single-break pattern with its break of the given kind in `round`.
HomeAwayPattern single_break_pattern(int rounds, int round, Venue kind);

/// One home-break and one away-break pattern per break round, break rounds
/// starting at 1 and spaced by the gaps. Slot 2k holds the home-break
/// pattern of the k-th break round, slot 2k+1 its complement.
HapSet hapset_from_dseq(const DSequence& d, int n);

/// Canonical pattern set: break rounds 1, 3, ..., n-1 (D-sequence 22...21).
HapSet cps_hapset(int n);

/// Circle-method (Berger table) schedule whose HAP set is cps_hapset(n).
Schedule circle_schedule(int n);

/// The hand-made ranking-fair schedule for 8 teams on the canonical pattern
/// set.
Schedule cps_rankingfair_8();

/// 2,2,1,2,(3,1)^i,2,(1,3)^j with i = ceil((n/2 - 5)/4), j = floor((n/2 - 5)/4).
/// Requires n = 2 mod 4 and n >= 18.
DSequence family_dseq_4k2(int n);

}  // namespace rrfair
