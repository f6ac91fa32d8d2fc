#include "heffter/fillers.hpp"

#include <algorithm>

namespace heffter {

namespace {

void require_disjoint_hamiltons(int n, const CellSet& s1, const CellSet& s2) {
  if (s1.order != n || s2.order != n)
    throw error(errc::invalid_argument, "cell sets of the wrong order");
  if (!cells_disjoint(s1, s2)) throw error(errc::not_disjoint, "cycles share a cell");
  if (!is_hamilton(s1)) throw error(errc::not_hamilton, "first cell set is not a Hamilton cycle");
  if (!is_hamilton(s2)) throw error(errc::not_hamilton, "second cell set is not a Hamilton cycle");
}

// Canonical e/f labeling: walk each cycle from its smallest cell, then rotate
// both so their first cells share the lowest common row, the e-cycle leading
// with the lower column and the f-cycle with the higher one.
std::pair<CycleTraversal, CycleTraversal> labeled_pair(const CellSet& s1, const CellSet& s2) {
  CycleTraversal t1 = traverse(s1, *s1.cells.begin(), true);
  CycleTraversal t2 = traverse(s2, *s2.cells.begin(), true);
  return align_traversals(t1, t2);
}

void check_line_sums(const SparseSquareArray& a, std::int64_t expected) {
  for (int i = 1; i <= a.order(); ++i) {
    if (a.row_sum(i) != expected)
      throw error(errc::bad_line_sum, "filler row " + std::to_string(i) + " sums to " +
                                          std::to_string(a.row_sum(i)) + ", expected " +
                                          std::to_string(expected));
    if (a.col_sum(i) != expected)
      throw error(errc::bad_line_sum, "filler column " + std::to_string(i) + " sums to " +
                                          std::to_string(a.col_sum(i)) + ", expected " +
                                          std::to_string(expected));
  }
}

}  // namespace

SparseSquareArray fill_bacon(int n, const CellSet& s1, const CellSet& s2) {
  require_disjoint_hamiltons(n, s1, s2);
  auto [e, f] = labeled_pair(s1, s2);

  SparseSquareArray a(n);
  // 1 in e_1, 4n in f_1, then four arithmetic progressions. Odd values land
  // on the e-cycle, even values on the f-cycle; support is exactly {1..4n}.
  a.set(e.cells[0], 1);
  a.set(f.cells[0], 4LL * n);
  for (int i = 1; i <= n - 1; ++i) {
    a.set(e.cells[2 * i], 2LL * n - 2 * i + 1);  // e_{2i+1}
    a.set(f.cells[2 * i], 2LL * n + 2 * i);      // f_{2i+1}
  }
  for (int i = 1; i <= n; ++i) {
    a.set(e.cells[2 * i - 1], 2LL * n + 2 * i - 1);  // e_{2i}
    a.set(f.cells[2 * i - 1], 2LL * n - 2 * i + 2);  // f_{2i}
  }
  check_line_sums(a, 8LL * n + 2);
  return a;
}

SparseSquareArray augment_crucial(const SparseSquareArray& a, const CellSet& s1,
                                  const CellSet& s2) {
  int n = a.order();
  if (a.cell_count() == 0 || a.cell_count() % n != 0)
    throw error(errc::bad_line_sum, "array does not have a uniform fill count");
  std::int64_t k = static_cast<std::int64_t>(a.cell_count()) / n;
  std::int64_t want = 2 * n * k + 1;
  for (int i = 1; i <= n; ++i) {
    if (a.row_fill(i) != k || a.col_fill(i) != k)
      throw error(errc::bad_line_sum, "line " + std::to_string(i) + " does not hold " +
                                          std::to_string(k) + " cells");
    if (a.row_sum(i) != want || a.col_sum(i) != want)
      throw error(errc::bad_line_sum, "line " + std::to_string(i) + " does not sum to " +
                                          std::to_string(want));
  }
  CellSet occupied = cells_of(a);
  if (!cells_disjoint(occupied, s1) || !cells_disjoint(occupied, s2))
    throw error(errc::not_disjoint, "cycle intersects the filled cells");

  SparseSquareArray grown = shift(fill_bacon(n, s1, s2), n * k);
  // Lines now sum to -(2nk+1) + (8n+2) + 4nk = 2n(k+4)+1.
  SparseSquareArray out = superimpose(negate(a), grown);
  check_line_sums(out, 2 * n * (k + 4) + 1);
  return out;
}

SparseSquareArray fill_hamilton_pair(int n, const CellSet& s1, const CellSet& s2,
                                     const RunPair& runs) {
  if (runs.t < 1 || runs.s < runs.t + 2 * n)
    throw error(errc::bad_run_spacing, "need t >= 1 and s >= t + 2n");
  require_disjoint_hamiltons(n, s1, s2);
  auto [e, f] = labeled_pair(s1, s2);

  const std::int64_t s = runs.s, t = runs.t;
  SparseSquareArray a(n);
  a.set(e.cells[0], s + 2 * n);
  a.set(f.cells[0], -(t + 2 * n));
  for (int i = 1; i <= n - 1; ++i) {
    a.set(e.cells[2 * i], s + 2 * i);     // e_{2i+1}
    a.set(f.cells[2 * i], -(t + 2 * i));  // f_{2i+1}
  }
  for (int i = 1; i <= n; ++i) {
    a.set(e.cells[2 * i - 1], -(s + 2 * i - 1));  // e_{2i}
    a.set(f.cells[2 * i - 1], t + 2 * i - 1);     // f_{2i}
  }
  check_line_sums(a, 0);
  return a;
}

namespace {

// Splits a 2-factor into its two n-cycles and returns canonical traversals.
std::pair<CycleTraversal, CycleTraversal> two_n_cycles(int n, const CellSet& s) {
  TwoFactor f;
  try {
    f = classify_cycles(s);
  } catch (const error& e) {
    throw error(errc::not_two_factor_of_two_n_cycles, e.what());
  }
  if (f.cycles.size() != 2 || f.cycles[0].length() != static_cast<std::size_t>(n) ||
      f.cycles[1].length() != static_cast<std::size_t>(n))
    throw error(errc::not_two_factor_of_two_n_cycles,
                "2-factor is not a union of two n-cycles");
  return {f.cycles[0], f.cycles[1]};
}

}  // namespace

SparseSquareArray fill_twofactor_pair(int n, const CellSet& s1, const CellSet& s2,
                                      const RunPair& runs) {
  if (n % 2 != 0)
    throw error(errc::not_two_factor_of_two_n_cycles, "order must be even");
  if (runs.v < 1 || runs.u < runs.v + n || runs.t < runs.u + n || runs.s < runs.t + n)
    throw error(errc::bad_run_spacing, "need v >= 1, u >= v+n, t >= u+n, s >= t+n");
  if (s1.order != n || s2.order != n)
    throw error(errc::invalid_argument, "cell sets of the wrong order");
  if (!cells_disjoint(s1, s2)) throw error(errc::not_disjoint, "2-factors share a cell");

  auto [c1, c1p] = two_n_cycles(n, s1);
  auto [c2a, c2b] = two_n_cycles(n, s2);

  // The two cycles of each 2-factor cover complementary halves of the rows.
  // Label S2's cycles so that C2 meets rows of C1 and C2' meets rows of C1'.
  std::set<int> rows1 = rows_of(c1), rows1p = rows_of(c1p);
  auto meets = [](const std::set<int>& a, const std::set<int>& b) {
    return std::any_of(a.begin(), a.end(), [&](int r) { return b.count(r) != 0; });
  };
  CycleTraversal c2 = c2a, c2p = c2b;
  if (!(meets(rows1, rows_of(c2)) && meets(rows1p, rows_of(c2p)))) std::swap(c2, c2p);
  if (!(meets(rows1, rows_of(c2)) && meets(rows1p, rows_of(c2p))))
    throw error(errc::alignment_impossible, "no labeling shares rows for both cycle pairs");

  auto [e, g] = align_traversals(c1, c2);
  auto [f, h] = align_traversals(c1p, c2p);

  const std::int64_t s = runs.s, t = runs.t, u = runs.u, v = runs.v;
  SparseSquareArray a(n);
  a.set(e.cells[0], s + n);
  a.set(g.cells[0], -(t + n));
  a.set(f.cells[0], u + n);
  a.set(h.cells[0], -(v + n));
  for (int i = 1; i <= n / 2 - 1; ++i) {
    a.set(e.cells[2 * i], s + 2 * i);
    a.set(g.cells[2 * i], -(t + 2 * i));
    a.set(f.cells[2 * i], u + 2 * i);
    a.set(h.cells[2 * i], -(v + 2 * i));
  }
  for (int i = 1; i <= n / 2; ++i) {
    a.set(e.cells[2 * i - 1], -(s + 2 * i - 1));
    a.set(g.cells[2 * i - 1], t + 2 * i - 1);
    a.set(f.cells[2 * i - 1], -(u + 2 * i - 1));
    a.set(h.cells[2 * i - 1], v + 2 * i - 1);
  }
  check_line_sums(a, 0);
  return a;
}

}  // namespace heffter
