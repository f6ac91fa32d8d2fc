#include "heffter/cycles.hpp"

#include <algorithm>
#include <map>

namespace heffter {

CellSet diagonal(int n, int d) {
  if (d < 0 || d >= n) throw error(errc::out_of_range, "diagonal index not in 0..n-1");
  CellSet s{n, {}};
  for (int r = 1; r <= n; ++r) s.cells.insert({wrap_index(r + d, n), r});
  return s;
}

CellSet cell_union(const CellSet& a, const CellSet& b) {
  if (a.order != b.order) throw error(errc::invalid_argument, "cell sets of different orders");
  CellSet s{a.order, a.cells};
  s.cells.insert(b.cells.begin(), b.cells.end());
  return s;
}

bool cells_disjoint(const CellSet& a, const CellSet& b) {
  const CellSet& small = a.cells.size() <= b.cells.size() ? a : b;
  const CellSet& large = a.cells.size() <= b.cells.size() ? b : a;
  return std::none_of(small.cells.begin(), small.cells.end(),
                      [&](Position p) { return large.contains(p); });
}

CellSet cells_of(const SparseSquareArray& a) {
  CellSet s{a.order(), {}};
  for (const auto& [p, v] : a.cells()) s.cells.insert(p);
  return s;
}

namespace {

// Row/column incidence for a cell set where every line holds at most 2 cells.
struct Incidence {
  std::vector<std::vector<Position>> by_row, by_col;

  explicit Incidence(const CellSet& s) : by_row(s.order + 1), by_col(s.order + 1) {
    for (Position p : s.cells) {
      by_row[p.row].push_back(p);
      by_col[p.col].push_back(p);
    }
  }

  Position row_partner(Position p) const {
    const auto& v = by_row[p.row];
    return v[0] == p ? v[1] : v[0];
  }
  Position col_partner(Position p) const {
    const auto& v = by_col[p.col];
    return v[0] == p ? v[1] : v[0];
  }
};

CycleTraversal walk_cycle(const Incidence& inc, int order, Position start, bool first_move_row,
                          std::set<Position>* visited) {
  CycleTraversal t{order, {}};
  Position cur = start;
  bool move_row = first_move_row;
  do {
    t.cells.push_back(cur);
    if (visited) visited->insert(cur);
    cur = move_row ? inc.row_partner(cur) : inc.col_partner(cur);
    move_row = !move_row;
  } while (cur != start);
  return t;
}

}  // namespace

TwoFactor classify_cycles(const CellSet& s) {
  Incidence inc(s);
  for (int i = 1; i <= s.order; ++i) {
    if (inc.by_row[i].size() != 2)
      throw error(errc::not_two_factor, "row " + std::to_string(i) + " covered " +
                                            std::to_string(inc.by_row[i].size()) + " times");
    if (inc.by_col[i].size() != 2)
      throw error(errc::not_two_factor, "column " + std::to_string(i) + " covered " +
                                            std::to_string(inc.by_col[i].size()) + " times");
  }
  TwoFactor f{s.order, {}};
  std::set<Position> visited;
  for (Position p : s.cells) {  // set order = ascending, so cycles come out sorted
    if (visited.count(p)) continue;
    f.cycles.push_back(walk_cycle(inc, s.order, p, true, &visited));
  }
  return f;
}

bool is_hamilton(const CellSet& s) {
  if (s.cells.size() != 2u * static_cast<unsigned>(s.order)) return false;
  try {
    TwoFactor f = classify_cycles(s);
    return f.cycles.size() == 1;
  } catch (const error&) {
    return false;
  }
}

CycleTraversal traverse(const CellSet& s, Position start, bool first_move_row) {
  if (!s.contains(start)) throw error(errc::not_single_cycle, "start cell not in the set");
  Incidence inc(s);
  for (Position p : s.cells) {
    if (inc.by_row[p.row].size() != 2 || inc.by_col[p.col].size() != 2)
      throw error(errc::not_single_cycle, "a covered line does not hold exactly 2 cells");
  }
  CycleTraversal t = walk_cycle(inc, s.order, start, first_move_row, nullptr);
  if (t.cells.size() != s.cells.size())
    throw error(errc::not_single_cycle, "cell set decomposes into several cycles");
  return t;
}

bool alternation_holds(const CycleTraversal& t) {
  std::size_t L = t.cells.size();
  if (L < 4 || L % 2 != 0) return false;
  for (std::size_t i = 0; i < L; ++i) {
    Position a = t.cells[i];
    Position b = t.cells[(i + 1) % L];
    bool same_row = a.row == b.row && a.col != b.col;
    bool same_col = a.col == b.col && a.row != b.row;
    if (i % 2 == 0 ? !same_row : !same_col) return false;
  }
  std::set<Position> uniq(t.cells.begin(), t.cells.end());
  return uniq.size() == L;
}

std::set<int> rows_of(const CycleTraversal& t) {
  std::set<int> rows;
  for (Position p : t.cells) rows.insert(p.row);
  return rows;
}

CycleTraversal rotate_to_row(const CycleTraversal& t, int row, bool start_low_col) {
  std::size_t L = t.cells.size();
  // Row pairs sit at even offsets (cells 2i+1, 2i+2 in 1-based labels).
  for (std::size_t i = 0; i < L; i += 2) {
    if (t.cells[i].row != row) continue;
    CycleTraversal out{t.order, {}};
    out.cells.reserve(L);
    Position a = t.cells[i];
    Position b = t.cells[i + 1];
    bool forward = start_low_col ? (a.col < b.col) : (a.col > b.col);
    if (forward) {
      for (std::size_t j = 0; j < L; ++j) out.cells.push_back(t.cells[(i + j) % L]);
    } else {
      // Reverse direction. The reversed sequence still alternates row-first.
      for (std::size_t j = 0; j < L; ++j) out.cells.push_back(t.cells[(i + 1 + L - j) % L]);
    }
    return out;
  }
  throw error(errc::no_shared_row, "row " + std::to_string(row) + " not on the cycle");
}

std::pair<CycleTraversal, CycleTraversal> align_traversals(const CycleTraversal& t1,
                                                           const CycleTraversal& t2) {
  std::set<int> r1 = rows_of(t1), r2 = rows_of(t2);
  std::vector<int> common;
  std::set_intersection(r1.begin(), r1.end(), r2.begin(), r2.end(), std::back_inserter(common));
  if (common.empty()) throw error(errc::no_shared_row, "traversals share no row");
  int row = common.front();
  return {rotate_to_row(t1, row, true), rotate_to_row(t2, row, false)};
}

}  // namespace heffter
