#include "heffter/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <vector>

namespace heffter {

namespace {

using Clock = std::chrono::steady_clock;

struct Searcher {
  int n, k;
  std::int64_t nk, modulus;
  SearchBudget budget;
  Clock::time_point start;

  std::uint64_t nodes = 0;
  bool out_of_budget = false;
  bool counting = false;
  std::uint64_t solutions = 0;
  std::optional<SparseSquareArray> first;

  // current pattern
  std::vector<std::vector<int>> row_cols;  // chosen columns per row (1-based rows)
  std::vector<int> col_fill;

  // value assignment state
  std::vector<Position> cells;              // row-major
  std::vector<std::int64_t> values;         // parallel to cells
  std::vector<char> mag_used;               // 1..nk
  std::vector<std::int64_t> row_sum, col_sum;
  std::vector<int> row_left, col_left;      // unassigned cells per line

  Searcher(int n_, int k_, const SearchBudget& b)
      : n(n_), k(k_), nk(static_cast<std::int64_t>(n_) * k_), modulus(2 * nk + 1), budget(b),
        start(Clock::now()) {}

  bool budget_spent() {
    if (out_of_budget) return true;
    if (nodes >= budget.max_nodes) return out_of_budget = true;
    if (budget.max_millis >= 0 && (nodes & 0x3FF) == 0) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
      if (ms.count() > budget.max_millis) return out_of_budget = true;
    }
    return false;
  }

  // ---- fill-pattern enumeration: k columns per row, k rows per column ----

  bool patterns() {
    row_cols.assign(n + 1, {});
    col_fill.assign(n + 1, 0);
    return pattern_row(1);
  }

  bool pattern_row(int r) {
    if (out_of_budget) return false;
    if (r > n) return assign_values();
    std::vector<int> cols;
    return pattern_col(r, 1, cols);
  }

  bool pattern_col(int r, int from, std::vector<int>& cols) {
    if (static_cast<int>(cols.size()) == k) {
      row_cols[r] = cols;
      bool stop = pattern_row(r + 1);
      row_cols[r].clear();
      return stop;
    }
    int need = k - static_cast<int>(cols.size());
    for (int c = from; c + need - 1 <= n; ++c) {
      if (col_fill[c] == k) continue;
      // every column must still be reachable by the remaining rows
      if (col_fill[c] + (n - r) < k - 1) continue;
      ++col_fill[c];
      cols.push_back(c);
      bool feasible = true;
      // columns skipped before c can only be filled by later rows
      for (int cc = from; cc < c && feasible; ++cc)
        if (col_fill[cc] + (n - r) < k) feasible = false;
      if (feasible && pattern_col(r, c + 1, cols)) return true;
      cols.pop_back();
      --col_fill[c];
      if (out_of_budget) return false;
    }
    return false;
  }

  // ---- signed value assignment over one pattern ----

  bool assign_values() {
    cells.clear();
    for (int r = 1; r <= n; ++r)
      for (int c : row_cols[r]) cells.push_back({r, c});
    values.assign(cells.size(), 0);
    mag_used.assign(nk + 1, 0);
    row_sum.assign(n + 1, 0);
    col_sum.assign(n + 1, 0);
    row_left.assign(n + 1, 0);
    col_left.assign(n + 1, 0);
    for (Position p : cells) ++row_left[p.row], ++col_left[p.col];
    return place(0);
  }

  bool accept_solution() {
    if (counting) {
      ++solutions;
      return false;  // keep enumerating
    }
    SparseSquareArray a(n);
    for (std::size_t i = 0; i < cells.size(); ++i) a.set(cells[i], values[i]);
    first = std::move(a);
    return true;
  }

  bool try_value(std::size_t idx, std::int64_t v) {
    ++nodes;
    if (budget_spent()) return false;
    Position p = cells[idx];
    std::int64_t m = v < 0 ? -v : v;
    bool last_row = row_left[p.row] == 1, last_col = col_left[p.col] == 1;
    if (last_row && (row_sum[p.row] + v) % modulus != 0) return false;
    if (last_col && (col_sum[p.col] + v) % modulus != 0) return false;
    mag_used[m] = 1;
    row_sum[p.row] += v, col_sum[p.col] += v;
    --row_left[p.row], --col_left[p.col];
    values[idx] = v;
    bool stop = place(idx + 1);
    values[idx] = 0;
    ++row_left[p.row], ++col_left[p.col];
    row_sum[p.row] -= v, col_sum[p.col] -= v;
    mag_used[m] = 0;
    return stop;
  }

  bool place(std::size_t idx) {
    if (out_of_budget) return false;
    if (idx == cells.size()) return accept_solution();
    Position p = cells[idx];
    bool last_row = row_left[p.row] == 1, last_col = col_left[p.col] == 1;
    if (last_row || last_col) {
      // the congruence pins the value up to a multiple of the modulus;
      // only two candidates are ever in range
      std::int64_t need = last_row ? (-row_sum[p.row]) % modulus : (-col_sum[p.col]) % modulus;
      if (need < 0) need += modulus;
      std::vector<std::int64_t> cand;
      if (need != 0 && need <= nk) cand.push_back(need);
      if (need - modulus >= -nk && need - modulus != 0) cand.push_back(need - modulus);
      std::sort(cand.begin(), cand.end(), [](std::int64_t a, std::int64_t b) {
        std::int64_t ma = a < 0 ? -a : a, mb = b < 0 ? -b : b;
        return ma != mb ? ma < mb : a > b;  // ascending magnitude, positive first
      });
      for (std::int64_t v : cand) {
        if (mag_used[v < 0 ? -v : v]) continue;
        if (try_value(idx, v)) return true;
        if (out_of_budget) return false;
      }
      return false;
    }
    for (std::int64_t m = 1; m <= nk; ++m) {
      if (mag_used[m]) continue;
      if (try_value(idx, m)) return true;
      if (out_of_budget) return false;
      if (try_value(idx, -m)) return true;
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

SearchResult search(int n, int k, const SearchBudget& budget) {
  SearchResult res;
  if (n < 1 || k < 3 || k > n) {
    res.outcome = SearchOutcome::exhausted;
    return res;
  }
  Searcher s(n, k, budget);
  bool found = s.patterns();
  res.nodes = s.nodes;
  if (found) {
    res.outcome = SearchOutcome::found;
    res.array = std::move(s.first);
  } else {
    res.outcome = s.out_of_budget ? SearchOutcome::budget_exceeded : SearchOutcome::exhausted;
  }
  return res;
}

CountResult count_solutions(int n, int k, const SearchBudget& budget) {
  CountResult res;
  if (k < 3 || k > n) return res;  // zero by precondition
  if (n > 4) throw error(errc::invalid_argument, "count_solutions is limited to n <= 4");
  Searcher s(n, k, budget);
  s.counting = true;
  s.patterns();
  res.nodes = s.nodes;
  res.count = s.solutions;
  res.budget_exceeded = s.out_of_budget;
  return res;
}

}  // namespace heffter
