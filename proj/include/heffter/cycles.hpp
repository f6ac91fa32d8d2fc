#pragma once

#include <vector>

#include "heffter/types.hpp"

namespace heffter {

// Cells of an n x n array viewed as edges of the bipartite row/column graph.
// A set of cells is a 2-factor when every row index and every column index is
// met exactly twice, and a Hamilton cycle when the 2-factor is one closed
// alternating cycle of 2n cells.

struct CellSet {
  int order = 0;
  std::set<Position> cells;

  bool contains(Position p) const { return cells.count(p) != 0; }
};

// Ordered cell sequence e_1..e_2L: consecutive cells share a row at odd
// indices and a column at even indices; the last and first share a column.
struct CycleTraversal {
  int order = 0;
  std::vector<Position> cells;

  std::size_t length() const { return cells.size(); }
};

struct TwoFactor {
  int order = 0;
  std::vector<CycleTraversal> cycles;
};

// The diagonal D_d: cells (r+d, r) for 1 <= r <= n, indices mod n with 0
// replaced by n. D_i u D_j is a Hamilton cycle exactly when gcd(j-i, n) = 1.
CellSet diagonal(int n, int d);

CellSet cell_union(const CellSet& a, const CellSet& b);
bool cells_disjoint(const CellSet& a, const CellSet& b);
CellSet cells_of(const SparseSquareArray& a);

// Decomposes a 2-factor into its closed alternating cycles, each reported in
// canonical order (lexicographically smallest cell first, first move along
// the row) and listed by ascending smallest cell.
// Throws not_two_factor naming the offending row or column index.
TwoFactor classify_cycles(const CellSet& s);

bool is_hamilton(const CellSet& s);

// Walks a single closed alternating cycle starting from start. first_move_row
// selects whether cells #1 and #2 share a row (the e_i labeling) or a column.
// Throws not_single_cycle.
CycleTraversal traverse(const CellSet& s, Position start, bool first_move_row);

// Alternation predicate for a full closed traversal, including the wrap.
bool alternation_holds(const CycleTraversal& t);

std::set<int> rows_of(const CycleTraversal& t);

// The two cells of `row` inside a cycle are always traversal-adjacent; this
// rotates (and reflects, when needed) the traversal so they become cells #1
// and #2. start_low_col picks which of the two leads.
CycleTraversal rotate_to_row(const CycleTraversal& t, int row, bool start_low_col);

// Rotates/reflects both traversals so cell #1 of each lies in their lowest
// common row. The first traversal starts at the lower-column cell of its pair
// in that row, the second at the higher-column cell; this orientation is what
// reproduces the published filler examples. Throws no_shared_row.
std::pair<CycleTraversal, CycleTraversal> align_traversals(const CycleTraversal& t1,
                                                           const CycleTraversal& t2);

}  // namespace heffter
