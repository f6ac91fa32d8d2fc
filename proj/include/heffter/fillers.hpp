#pragma once

#include "heffter/cycles.hpp"
#include "heffter/types.hpp"

namespace heffter {

// The four generic filling procedures that add 4 entries to every row and
// column. Each one recomputes its own line-sum contract before returning and
// throws bad_line_sum if the placement broke it.

// Fills two disjoint Hamilton cycles with {1..4n} so that every row and
// column sums to 8n+2.
// Throws not_hamilton, not_disjoint, no_shared_row.
SparseSquareArray fill_bacon(int n, const CellSet& s1, const CellSet& s2);

// Given an H(n;k) whose every line sums to exactly 2nk+1 and two Hamilton
// cycles disjoint from it and from each other, returns the H(n;k+4) with
// line sums 2n(k+4)+1: negate(A) superimposed with the 8n+2 fill shifted by
// nk. Throws bad_line_sum when a line of A misses the required sum.
SparseSquareArray augment_crucial(const SparseSquareArray& a, const CellSet& s1,
                                  const CellSet& s2);

// Run parameters for the shiftable fillers. The source statements demand
// strict spacing (s > t + 2n etc.); disjoint supports only need >=, and the
// case schedules rely on equality for seamless coverage, so >= is accepted.
struct RunPair {
  std::int64_t s = 0;
  std::int64_t t = 0;
  std::int64_t u = 0;  // 2-factor filler only
  std::int64_t v = 0;  // 2-factor filler only
};

// Fills two disjoint Hamilton cycles with support {s+i, t+i | 1 <= i <= 2n},
// zero line sums, two positive and two negative entries per line (shiftable).
// Needs t >= 1 and s >= t + 2n. Throws bad_run_spacing and the cycle errors.
SparseSquareArray fill_hamilton_pair(int n, const CellSet& s1, const CellSet& s2,
                                     const RunPair& runs);

// n even. Fills two disjoint 2-factors, each the union of two n-cycles, with
// support {s+i, t+i, u+i, v+i | 1 <= i <= n}, zero line sums, shiftable.
// Needs v >= 1, u >= v+n, t >= u+n, s >= t+n.
// Throws not_two_factor_of_two_n_cycles, alignment_impossible, bad_run_spacing.
SparseSquareArray fill_twofactor_pair(int n, const CellSet& s1, const CellSet& s2,
                                      const RunPair& runs);

}  // namespace heffter
