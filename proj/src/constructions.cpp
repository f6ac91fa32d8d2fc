#include "heffter/constructions.hpp"

#include <algorithm>

#include "heffter/fillers.hpp"
#include "heffter/fixtures.hpp"
#include "heffter/verify.hpp"

namespace heffter {

const char* verdict_name(CaseVerdict v) {
  switch (v) {
    case CaseVerdict::case_a: return "CaseA";
    case CaseVerdict::case_b: return "CaseB";
    case CaseVerdict::case_c: return "CaseC";
    case CaseVerdict::case_d: return "CaseD";
    case CaseVerdict::case_e: return "CaseE";
    case CaseVerdict::integer_case: return "IntegerCase";
    case CaseVerdict::full_square: return "FullSquare";
    case CaseVerdict::invalid: return "Invalid";
  }
  return "Unknown";
}

CaseClassification classify(long long n, long long k) {
  if (k < 3)
    return {CaseVerdict::invalid, "k = " + std::to_string(k) + " < 3: no H(n;k) exists"};
  if (k > n)
    return {CaseVerdict::invalid,
            "k = " + std::to_string(k) + " exceeds n = " + std::to_string(n) +
                ": rows cannot hold k cells"};
  if (k == n)
    return {CaseVerdict::full_square,
            "k = n: full arrays are handled by classical constructions"};
  long long r = (n % 4) * (k % 4) % 4;
  if (r == 0 || r == 3)
    return {CaseVerdict::integer_case,
            "nk = " + std::to_string(r) + " (mod 4): an integer H(n;k) exists by classical "
                                          "constructions; this engine covers nk = 1,2 (mod 4)"};
  int rn = static_cast<int>(n % 4), rk = static_cast<int>(k % 4);
  if (rk == 2) return {CaseVerdict::case_a, "k = 2 (mod 4), n odd"};
  if (rk == 3 && rn == 3) return {CaseVerdict::case_b, "k = 3 (mod 4), n = 3 (mod 4)"};
  if (rk == 3 && rn == 2) return {CaseVerdict::case_c, "k = 3 (mod 4), n = 2 (mod 4)"};
  if (rk == 1 && rn == 1) return {CaseVerdict::case_d, "k = 1 (mod 4), n = 1 (mod 4)"};
  if (rk == 1 && rn == 2) return {CaseVerdict::case_e, "k = 1 (mod 4), n = 2 (mod 4)"};
  throw error(errc::internal, "residue dispatch fell through");
}

namespace {

void require_case(int n, int k, CaseVerdict expected) {
  CaseClassification c = classify(n, k);
  if (c.verdict != expected)
    throw error(errc::wrong_case, "(" + std::to_string(n) + "," + std::to_string(k) +
                                      ") classifies as " + verdict_name(c.verdict) + ", not " +
                                      verdict_name(expected));
}

CellSet diagonal_pair(int n, int d1, int d2) {
  return cell_union(diagonal(n, d1), diagonal(n, d2));
}

// Base support plus the contiguous filler range [run_lo, run_hi] must tile
// {1..nk} with no duplicates. Checked before any filler runs.
void check_support_plan(const SparseSquareArray& base, std::int64_t run_lo, std::int64_t run_hi,
                        std::int64_t nk) {
  auto mult = support_multiplicity(base);
  for (const auto& [x, c] : mult)
    if (c != 1)
      throw error(errc::internal, "base support holds " + std::to_string(x) + " twice");
  std::int64_t expected_cells = nk - (run_hi < run_lo ? 0 : run_hi - run_lo + 1);
  if (static_cast<std::int64_t>(mult.size()) != expected_cells)
    throw error(errc::internal, "base support size " + std::to_string(mult.size()) +
                                    ", expected " + std::to_string(expected_cells));
  for (std::int64_t x = 1; x <= nk; ++x) {
    bool in_base = mult.count(x) != 0;
    bool in_runs = x >= run_lo && x <= run_hi;
    if (in_base == in_runs)
      throw error(errc::internal, "support plan does not cover " + std::to_string(x) +
                                      " exactly once");
  }
}

void check_diagonal_confinement(const SparseSquareArray& a, const std::set<int>& allowed) {
  int n = a.order();
  for (const auto& [p, v] : a.cells()) {
    int d = wrap_index(p.row - p.col, n) % n;  // D_d contains (r, c) iff r - c = d (mod n)
    if (!allowed.count(d))
      throw error(errc::internal, "cell (" + std::to_string(p.row) + "," +
                                      std::to_string(p.col) + ") lies on unexpected diagonal D_" +
                                      std::to_string(d % n));
  }
}

}  // namespace

namespace detail {

// ---------------------------------------------------------------------------
// Case A: base H(n;6) on diagonals D_0, D_2..D_6, line sums 12n+1.

SparseSquareArray case_a_base(int n) {
  SparseSquareArray a(n);
  auto put = [&](long long r, long long c, std::int64_t v) {
    a.set({wrap_index(r, n), wrap_index(c, n)}, v);
  };
  const std::int64_t N = n;
  for (int i = 1; i <= n; ++i) {
    put(i, i, 6LL * i);
    put(i + 2, i, 6 * N + 2 - 6 * i);
    put(i + 1, n - 2 + i, 6 * N + 1 - 6 * i);
    put(i + 2, n - 2 + i, 6LL * i - 3);
    put(i, n - 5 + i, 6 * N + 5 - 6 * i);
    put(i + 1, n - 5 + i, -6 * N - 4 + 6 * i);
  }
  return a;
}

// ---------------------------------------------------------------------------
// Cases B and C: zero-sum corner blocks.

int remap_index(int i, int q) { return i <= (q + 1) / 2 ? 2 * i - 1 : 2 * (q + 1 - i); }

SparseSquareArray remap_block(const SparseSquareArray& a) {
  int q = a.order();
  SparseSquareArray out(q);
  for (const auto& [p, v] : a.cells())
    out.set({remap_index(p.row, q), remap_index(p.col, q)}, v);
  return out;
}

SparseSquareArray case_b_a0_prime(int m) {
  if (m < 4) throw error(errc::invalid_argument, "case B corner block needs m >= 4");
  int q = 4 * m - 7;
  const std::int64_t M = m;
  SparseSquareArray a(q);
  for (int i = 1; i <= m; ++i) {
    a.set({2 * i - 1, 2 * i}, 8 * M + 1 - i);
    a.set({2 * i, 2 * i - 1}, -(8 * M + i));
  }
  for (int i = 1; i <= m - 1; ++i) {
    a.set({2 * i, 2 * i + 1}, 12 * M - i);
    a.set({2 * i + 1, 2 * i}, -(4 * M + 1 + i));
  }
  for (int i = 1; i <= m - 3; ++i) {
    a.set({2 * m - 2 + 2 * i, 2 * m - 1 + 2 * i}, 5 * M + i);
    a.set({2 * m - 1 + 2 * i, 2 * m - 2 + 2 * i}, -(11 * M + 1 - i));
  }
  for (int i = 1; i <= m - 4; ++i) {
    a.set({2 * m - 1 + 2 * i, 2 * m + 2 * i}, 9 * M + i);
    a.set({2 * m + 2 * i, 2 * m - 1 + 2 * i}, -(7 * M + 1 - i));
  }
  for (int i = 1; i <= 2 * m - 2; ++i) a.set({i + 1, i + 1}, -(4 * M - 1 - i));
  for (int i = 1; i <= 2 * m - 8; ++i) a.set({2 * m + i, 2 * m + i}, 2 * M - i);
  a.set({2 * m, 2 * m}, 4 * M - 1);
  a.set({1, q}, -12 * M);
  a.set({1, 1}, 4 * M);
  a.set({q, 1}, 4 * M + 1);
  a.set({q, q}, 6 * M + 3);
  return a;
}

SparseSquareArray case_c_a0_prime(int m) {
  if (m < 7) throw error(errc::invalid_argument, "case C corner block needs m >= 7");
  int q = 4 * m - 13;
  const std::int64_t M = m;
  SparseSquareArray a(q);
  for (int i = 1; i <= m; ++i) {
    a.set({2 * i - 1, 2 * i}, 8 * M + 1 - i);
    a.set({2 * i, 2 * i - 1}, -(8 * M + i));
  }
  for (int i = 1; i <= m - 1; ++i) {
    a.set({2 * i, 2 * i + 1}, 12 * M - i);
    a.set({2 * i + 1, 2 * i}, -(4 * M + 1 + i));
  }
  for (int i = 1; i <= m - 6; ++i) {
    a.set({2 * m - 2 + 2 * i, 2 * m - 1 + 2 * i}, 5 * M + i);
    a.set({2 * m - 1 + 2 * i, 2 * m - 2 + 2 * i}, -(11 * M + 1 - i));
  }
  for (int i = 1; i <= m - 7; ++i) {
    a.set({2 * m - 1 + 2 * i, 2 * m + 2 * i}, 9 * M + i);
    a.set({2 * m + 2 * i, 2 * m - 1 + 2 * i}, -(7 * M + 1 - i));
  }
  for (int i = 1; i <= 2 * m - 2; ++i) a.set({i + 1, i + 1}, -(4 * M - 1 - i));
  for (int i = 1; i <= 2 * m - 14; ++i) a.set({2 * m + i, 2 * m + i}, 2 * M - i);
  a.set({2 * m, 2 * m}, 4 * M - 1);
  a.set({1, q}, -12 * M);
  a.set({1, 1}, 4 * M);
  a.set({q, 1}, 4 * M + 1);
  a.set({q, q}, 6 * M + 6);
  return a;
}

SparseSquareArray case_b_a1(int m) {
  const std::int64_t M = m;
  SparseSquareArray a(7);
  a.set({1, 1}, -(6 * M + 1)), a.set({1, 2}, 6 * M), a.set({1, 3}, 1);
  a.set({2, 1}, 6 * M - 2), a.set({2, 2}, -(12 * M + 2)), a.set({2, 4}, 6 * M + 4);
  a.set({3, 1}, 3), a.set({3, 3}, 10 * M - 3), a.set({3, 5}, -10 * M);
  a.set({4, 2}, 6 * M + 2), a.set({4, 4}, 6 * M - 1), a.set({4, 6}, -(12 * M + 1));
  a.set({5, 3}, -(10 * M - 2)), a.set({5, 5}, 10 * M + 2), a.set({5, 7}, -4);
  a.set({6, 4}, -(12 * M + 3)), a.set({6, 6}, 2 * M), a.set({6, 7}, 10 * M + 3);
  a.set({7, 5}, -2), a.set({7, 6}, 10 * M + 1), a.set({7, 7}, -(10 * M - 1));
  return a;
}

SparseSquareArray case_c_a1(int m) {
  const std::int64_t M = m;
  SparseSquareArray a(13);
  a.set({1, 1}, 1), a.set({1, 2}, 10 * M - 4), a.set({1, 3}, -(10 * M - 3));
  a.set({2, 1}, 6 * M - 5), a.set({2, 2}, 2), a.set({2, 4}, -(6 * M - 3));
  a.set({3, 1}, -(6 * M - 4)), a.set({3, 4}, -(6 * M + 7)), a.set({3, 5}, 12 * M + 3);
  a.set({4, 2}, -(10 * M - 2)), a.set({4, 3}, 10 * M + 4), a.set({4, 6}, -6);
  a.set({5, 3}, -7), a.set({5, 6}, 10 * M + 1), a.set({5, 7}, -(10 * M - 6));
  a.set({6, 4}, 12 * M + 4), a.set({6, 5}, -(6 * M + 5)), a.set({6, 8}, -(6 * M - 1));
  a.set({7, 5}, -(6 * M - 2)), a.set({7, 8}, -(6 * M + 3)), a.set({7, 9}, 12 * M + 1);
  a.set({8, 6}, -(10 * M - 5)), a.set({8, 7}, -5), a.set({8, 10}, 10 * M);
  a.set({9, 7}, 10 * M - 1), a.set({9, 10}, -(10 * M + 3)), a.set({9, 11}, 4);
  a.set({10, 8}, 12 * M + 2), a.set({10, 9}, -6 * M), a.set({10, 12}, -(6 * M + 2));
  a.set({11, 9}, -(6 * M + 1)), a.set({11, 12}, -(6 * M + 4)), a.set({11, 13}, 12 * M + 5);
  a.set({12, 10}, 3), a.set({12, 11}, 10 * M + 2), a.set({12, 13}, -(10 * M + 5));
  a.set({13, 11}, -(10 * M + 6)), a.set({13, 12}, 12 * M + 6), a.set({13, 13}, -2 * M);
  return a;
}

SparseSquareArray block_c(std::int64_t nk) {
  SparseSquareArray c(3);
  c.set({1, 1}, 5), c.set({1, 2}, nk), c.set({1, 3}, nk - 4);
  c.set({2, 1}, nk - 3), c.set({2, 2}, 6), c.set({2, 3}, nk - 2);
  c.set({3, 1}, nk - 1), c.set({3, 2}, nk - 5), c.set({3, 3}, 7);
  return c;
}

SparseSquareArray case_c_a2(std::int64_t nk) {
  SparseSquareArray a(3);
  a.set({1, 1}, -8), a.set({1, 2}, nk - 2), a.set({1, 3}, -(nk - 10));
  a.set({2, 1}, -(nk - 9)), a.set({2, 2}, -9), a.set({2, 3}, nk);
  a.set({3, 1}, nk - 1), a.set({3, 2}, -(nk - 11)), a.set({3, 3}, -10);
  return a;
}

SparseSquareArray case_c_a3(std::int64_t nk) {
  SparseSquareArray a(3);
  a.set({1, 1}, 11), a.set({1, 2}, nk - 3), a.set({1, 3}, nk - 7);
  a.set({2, 1}, nk - 6), a.set({2, 2}, 12), a.set({2, 3}, nk - 5);
  a.set({3, 1}, nk - 4), a.set({3, 2}, nk - 8), a.set({3, 3}, 13);
  return a;
}

// ---------------------------------------------------------------------------
// Case D: base H(n;5) with line sums 40m+11, n = 4m+1, m >= 3.

SparseSquareArray case_d_base(int n) {
  int m = (n - 1) / 4;
  if (m < 3 || n != 4 * m + 1) throw error(errc::invalid_argument, "case D base needs n = 4m+1, m >= 3");
  const std::int64_t M = m;
  SparseSquareArray a(n);
  a.set({4 * m - 1, 4 * m}, -1);
  a.set({4 * m - 1, 1}, 2);
  a.set({4 * m, 2}, 2 * M + 1);
  a.set({4 * m + 1, 3}, 2 * M + 2);
  a.set({2 * m - 2, 4 * m}, 4 * M);
  a.set({2 * m - 1, 2 * m + 2}, 4 * M + 1);
  a.set({2 * m, 2 * m + 3}, 4 * M + 2);
  a.set({2 * m + 2, 2 * m + 3}, -(4 * M + 3));
  a.set({2 * m + 1, 1}, -(4 * M + 4));
  a.set({4 * m + 1, 2 * m + 1}, -(6 * M + 2));
  a.set({4 * m - 3, 2 * m + 1}, 6 * M + 1);
  a.set({2 * m, 2 * m + 2}, -(8 * M + 2));
  a.set({2, 2 * m + 1}, 8 * M + 3);
  a.set({3, 4 * m}, 8 * M + 5);
  a.set({1, 2 * m}, 12 * M + 2);
  a.set({1, 4 * m + 1}, 12 * M + 4);
  a.set({4 * m, 2 * m + 2}, 12 * M + 5);
  a.set({4 * m + 1, 4 * m + 1}, 16 * M + 5);
  for (int i = 1; i <= 2 * m - 3; ++i) a.set({i, i + 3}, 2 * M + i + 2);
  for (int i = 1; i <= 2 * m; ++i) a.set({i + 1, i}, 16 * M + 5 - i);
  for (int i = 1; i <= 2 * m; ++i) a.set({i, i}, 20 * M + 6 - i);
  for (int i = 1; i <= 2 * m - 1; ++i) a.set({2 * m - i, 2 * m + 1 - i}, -(8 * M + 2 - i));
  for (int i = 1; i <= 2 * m - 1; ++i) a.set({2 * m + 3 - i, 4 * m + 2 - i}, 12 * M + 5 - 2 * i);
  for (int i = 1; i <= 2 * m - 1; ++i) a.set({2 * m + i, 2 * m + i}, 14 * M + 5 - i);
  for (int i = 1; i <= 2 * m; ++i) a.set({2 * m + 1 + i, 2 * m + i}, 18 * M + 6 - i);
  for (int i = 1; i <= 2 * m - 1; ++i) a.set({4 * m + 2 - i, 2 * m - i}, 12 * M + 2 - 2 * i);
  for (int i = 1; i <= m - 1; ++i) a.set({2 * m + 2 * i, 2 * m + 2 * i + 3}, 2LL * i + 1);
  for (int i = 1; i <= m - 1; ++i) a.set({2 * m + 2 * i + 2, 2 * m + 2 * i + 3}, -(2LL * i + 2));
  for (int i = 1; i <= m - 2; ++i) a.set({2 * m + 2 * i - 1, 2 * m + 2 * i + 2}, 4 * M + 2 * i + 3);
  for (int i = 1; i <= m - 2; ++i) a.set({2 * m + 2 * i + 1, 2 * m + 2 * i + 2}, -(4 * M + 2 * i + 4));
  return a;
}

CellSet case_d_hamilton(int m) {
  int n = 4 * m + 1;
  CellSet s{n, {}};
  for (int i = 1; i <= 2 * m - 3; ++i) {
    s.cells.insert({i, 2 * m + 1 + i});
    s.cells.insert({i, 2 * m + 2 + i});
  }
  s.cells.insert({2 * m - 2, 4 * m - 1});
  s.cells.insert({2 * m - 2, 4 * m + 1});
  s.cells.insert({2 * m - 1, 4 * m + 1});
  s.cells.insert({2 * m - 1, 4 * m});
  s.cells.insert({4 * m, 4 * m});
  s.cells.insert({4 * m, 2 * m + 1});
  for (int i = 2 * m; i <= 4 * m - 1; ++i) {
    s.cells.insert({i, i - 2 * m + 1});
    s.cells.insert({i, i - 2 * m + 2});
  }
  s.cells.insert({4 * m + 1, 1});
  s.cells.insert({4 * m + 1, 2 * m + 2});
  return s;
}

std::vector<std::pair<int, int>> case_d_diagonal_pairs(int m) {
  if (m == 4) return {{2, 3}, {9, 11}, {12, 13}};
  if (m == 5) return {{2, 3}, {5, 7}, {11, 13}, {14, 15}, {16, 17}};
  std::vector<std::pair<int, int>> p{{2, 3}, {2 * m - 5, 2 * m - 3}, {2 * m + 1, 2 * m + 3}};
  for (int i = 0; i <= m - 6; ++i) p.push_back({5 + 2 * i, 6 + 2 * i});
  for (int i = 0; i <= m - 4; ++i) p.push_back({2 * m + 4 + 2 * i, 2 * m + 5 + 2 * i});
  return p;
}

// ---------------------------------------------------------------------------
// Case E: block-diagonal H(n;5), n = 4m+2. The top block has zero line sums,
// the bottom block sums to 2nk+1.

SparseSquareArray case_e_a0(int m) {
  int q = 2 * m + 1;
  const std::int64_t M = m;
  SparseSquareArray::CellMap cells;
  auto put = [&](long long r, long long c, std::int64_t v) {
    cells[{wrap_index(r, q), wrap_index(c, q)}] = v;
  };
  for (int i = 1; i <= q; ++i) {
    put(i, i, 2LL * i);
    put(3 - i, 2 * m + 1 - i, 4 * M + 2 + i);
    put(2 + i, 1 + i, -(6 * M + 3 + i));
    put(2 + i, i - 2, 8 * M + 3 + 2 * i);
    put(i, i - 2, -(8 * M + 4 + 2 * i));
  }
  // Two entry swaps between columns 1 and 2m+1 turn the +-(2m+1) column sums
  // into zeros.
  std::swap(cells[{2, 1}], cells[{2, q}]);
  std::swap(cells[{4, 1}], cells[{4, q}]);
  SparseSquareArray a(q);
  for (const auto& [p, v] : cells) a.set(p, v);
  return a;
}

SparseSquareArray case_e_a1(int m, int k) {
  if (m < 4) throw error(errc::invalid_argument, "formula block needs m >= 4");
  int q = 2 * m + 1;
  int n = 4 * m + 2;
  const std::int64_t M = m, KN = static_cast<std::int64_t>(k) * n;
  SparseSquareArray a(q);
  auto put = [&](long long r, long long c, std::int64_t v) {
    a.set({wrap_index(r, q), wrap_index(c, q)}, v);
  };
  for (int i = 1; i <= q; ++i) put(i, i, 2LL * i - 1);
  for (int i = 1; i <= q; ++i) put(i, 2 * m - 1 + i, KN + 1 - i);
  for (int i = 1; i <= 2 * m - 2; ++i) put(i, i + 1, KN - 2 * M - i);
  for (int i = 1; i <= q; ++i) put(4 + i, i, -(12 * M + 6 + i));
  for (int i = 1; i <= 2 * m - 2; ++i) put(6 + i, 1 + i, 14 * M + 9 + i);
  // Six corner entries: rows 4..6 and 2m-1..2m+1 each still need one cell,
  // and the values below are the unique ones closing those line sums.
  put(4, 1, 16 * M + 8);
  put(5, q, 14 * M + 8);
  put(6, 2 * m, 14 * M + 9);
  put(2 * m - 1, 1, KN - 4 * M + 1);
  put(2 * m, q, KN - 4 * M);
  put(2 * m + 1, 2 * m, KN - 4 * M - 1);
  return a;
}

CellSet case_e_h_cycle(int m) {
  int q = 2 * m + 1;
  CellSet s{q, {}};
  for (int i = 1; i <= q; ++i) {
    s.cells.insert({wrap_index(i + 1, q), i});
    s.cells.insert({wrap_index(2 * m - 2 + i, q), i});
  }
  s.cells.erase({2 * m - 1, 1});
  s.cells.erase({2 * m + 1, 2 * m});
  s.cells.insert({2 * m - 1, 2 * m});
  s.cells.insert({2 * m + 1, 1});
  return s;
}

CellSet case_e_k_cycle(int m) {
  int q = 2 * m + 1;
  CellSet s{q, {}};
  for (int i = 1; i <= q; ++i) {
    s.cells.insert({wrap_index(3 + i, q), i});
    s.cells.insert({wrap_index(7 + i, q), i});
  }
  s.cells.erase({4, 1});
  s.cells.erase({6, 2 * m});
  s.cells.insert({4, 2 * m});
  s.cells.insert({6, 1});
  return s;
}

namespace {

CellSet shift_cells(const CellSet& s, int row_off, int col_off, int target_order) {
  CellSet out{target_order, {}};
  for (Position p : s.cells) out.cells.insert({p.row + row_off, p.col + col_off});
  return out;
}

// An n-cycle from two diagonals of one (q x q) quadrant of the n x n array.
CellSet quadrant_diagonal_pair(int q, int d1, int d2, int row_off, int col_off, int n) {
  CellSet s{n, {}};
  for (int c = 1; c <= q; ++c) {
    s.cells.insert({row_off + wrap_index(c + d1, q), col_off + c});
    s.cells.insert({row_off + wrap_index(c + d2, q), col_off + c});
  }
  return s;
}

}  // namespace

std::vector<CellSet> case_e_two_factors(int n, int k) {
  int m = (n - 2) / 4;
  int q = 2 * m + 1;

  // Cycles of length n inside the top-left quadrant: pairs of its empty
  // diagonals (the block occupies quadrant diagonals 0..4).
  std::vector<CellSet> top;
  for (int j = 0; j + 1 <= 2 * (m - 2); j += 2)
    top.push_back(quadrant_diagonal_pair(q, 5 + j, 6 + j, 0, 0, n));

  // Matching cycles inside the bottom-right quadrant.
  std::vector<CellSet> bottom;
  if (m == 3) {
    // The 14 cells left empty by the 7x7 block form one n-cycle.
    SparseSquareArray block = get_fixture("A1_m3", k).array;
    CellSet s{n, {}};
    for (int r = 1; r <= q; ++r)
      for (int c = 1; c <= q; ++c)
        if (!block.filled({r, c})) s.cells.insert({q + r, q + c});
    bottom.push_back(s);
  } else if (m >= 4) {
    bottom.push_back(shift_cells(case_e_h_cycle(m), q, q, n));
    bottom.push_back(shift_cells(case_e_k_cycle(m), q, q, n));
    if (m == 5) {
      bottom.push_back(quadrant_diagonal_pair(q, 6, 9, q, q, n));
    } else if (m >= 6) {
      bottom.push_back(quadrant_diagonal_pair(q, 6, 8, q, q, n));
      bottom.push_back(quadrant_diagonal_pair(q, 2 * m - 3, 2 * m - 1, q, q, n));
      for (int i = 0; i <= m - 7; ++i)
        bottom.push_back(quadrant_diagonal_pair(q, 9 + 2 * i, 10 + 2 * i, q, q, n));
    }
  }
  if (top.size() != bottom.size())
    throw error(errc::internal, "quadrant cycle counts differ");

  std::vector<CellSet> factors;
  for (std::size_t j = 0; j < top.size(); ++j)
    factors.push_back(cell_union(top[j], bottom[j]));
  // m further 2-factors from the two empty off-diagonal quadrants.
  for (int j = 0; j < m; ++j) {
    CellSet tr = quadrant_diagonal_pair(q, 2 * j, 2 * j + 1, 0, q, n);
    CellSet bl = quadrant_diagonal_pair(q, 2 * j, 2 * j + 1, q, 0, n);
    factors.push_back(cell_union(tr, bl));
  }
  return factors;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Builders.

SparseSquareArray build_case_a(int n, int k) {
  require_case(n, k, CaseVerdict::case_a);
  SparseSquareArray a = detail::case_a_base(n);
  int p = (k - 6) / 4;
  for (int j = 1; j <= p; ++j) {
    CellSet s1 = diagonal_pair(n, 5 + 2 * j, 6 + 2 * j);
    CellSet s2 = diagonal_pair(n, 5 + 2 * p + 2 * j, 6 + 2 * p + 2 * j);
    a = augment_crucial(a, s1, s2);
  }
  return a;
}

namespace {

// Shared tail of cases B and C: p applications of the Hamilton-pair filler
// over the given diagonal pairs, with contiguous ascending runs starting
// right above the base support.
SparseSquareArray apply_hamilton_fills(SparseSquareArray a, int n, int p, std::int64_t run_base,
                                       const std::vector<std::pair<int, int>>& pairs,
                                       const std::vector<CellSet>& lead_cycles) {
  int lead = static_cast<int>(lead_cycles.size()) / 2;  // applications with explicit cycles
  if (static_cast<long long>(pairs.size()) < 2LL * (p - lead))
    throw error(errc::internal, "not enough diagonal pairs for k");
  for (int j = 1; j <= p; ++j) {
    RunPair runs;
    runs.t = run_base + static_cast<std::int64_t>(j - 1) * 4 * n;
    runs.s = runs.t + 2 * n;
    CellSet s1{n, {}}, s2{n, {}};
    if (j <= lead) {
      s1 = lead_cycles[2 * j - 2];
      s2 = lead_cycles[2 * j - 1];
    } else {
      int base = 2 * (j - 1 - lead);
      s1 = diagonal_pair(n, pairs[base].first, pairs[base].second);
      s2 = diagonal_pair(n, pairs[base + 1].first, pairs[base + 1].second);
    }
    a = superimpose(a, fill_hamilton_pair(n, s1, s2, runs));
  }
  return a;
}

std::vector<std::pair<int, int>> consecutive_pairs_from(int first, int count) {
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < count; ++i) p.push_back({first + 2 * i, first + 2 * i + 1});
  return p;
}

}  // namespace

SparseSquareArray build_case_b(int n, int k) {
  require_case(n, k, CaseVerdict::case_b);
  int m = (n - 3) / 4;
  int p = (k - 3) / 4;
  const std::int64_t nk = static_cast<std::int64_t>(n) * k;

  if (n == 7) return get_fixture("H(7;3)").array;

  SparseSquareArray base(n);
  if (n == 11 || n == 15) {
    SparseSquareArray b = get_fixture("B(" + std::to_string(n) + ")").array;
    base = superimpose(embed_block(b, n, 0, 0), embed_block(detail::block_c(nk), n, n - 3, n - 3));
  } else {
    SparseSquareArray a0 = detail::remap_block(detail::case_b_a0_prime(m));
    base = embed_block(a0, n, 0, 0);
    base = superimpose(base, embed_block(detail::case_b_a1(m), n, 4 * m - 7, 4 * m - 7));
    base = superimpose(base, embed_block(detail::block_c(nk), n, 4 * m, 4 * m));
  }
  check_diagonal_confinement(base, {0, 1, 2, n - 2, n - 1});

  std::int64_t run_base = 12LL * m + 3;
  check_support_plan(base, run_base + 1, nk - 6, nk);
  return apply_hamilton_fills(std::move(base), n, p, run_base,
                              consecutive_pairs_from(3, 2 * p), {});
}

SparseSquareArray build_case_c(int n, int k) {
  require_case(n, k, CaseVerdict::case_c);
  int p = (k - 3) / 4;
  const std::int64_t nk = static_cast<std::int64_t>(n) * k;

  if (n == 6) return get_fixture("H(6;3)").array;

  SparseSquareArray base(n);
  std::int64_t run_base = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<CellSet> lead;

  if (n == 30) {
    Fixture fx = get_fixture("H(30;3)", k);  // numeric part + C(k)
    base = fx.array;
    check_diagonal_confinement(base, {0, 1, 2, 3, 11, 18, 27, 28, 29});
    run_base = 3LL * n - 6;
    if (p >= 1) {
      lead = {fx.masks.at("H"), fx.masks.at("K")};
      pairs = {{4, 5},   {6, 7},   {8, 9},   {12, 13}, {14, 15},
               {16, 17}, {19, 20}, {21, 22}, {23, 24}, {25, 26}};
    }
  } else if (n <= 26) {
    SparseSquareArray b = get_fixture("B(" + std::to_string(n) + ")").array;
    base = superimpose(embed_block(b, n, 0, 0), embed_block(detail::block_c(nk), n, n - 3, n - 3));
    run_base = 3LL * n - 6;
    if (n == 26) {
      check_diagonal_confinement(base, {0, 1, 2, 9, 24, 25});
      pairs = {{10, 11}, {12, 13}, {14, 15}, {16, 17}, {18, 19},
               {20, 21}, {22, 23}, {3, 4},   {5, 6},   {7, 8}};
    } else {
      check_diagonal_confinement(base, {0, 1, 2, n - 2, n - 1});
      pairs = consecutive_pairs_from(3, 2 * p);
    }
  } else {
    int m = (n - 6) / 4;
    SparseSquareArray a0 = detail::remap_block(detail::case_c_a0_prime(m));
    base = embed_block(a0, n, 0, 0);
    base = superimpose(base, embed_block(detail::case_c_a1(m), n, 4 * m - 13, 4 * m - 13));
    base = superimpose(base, embed_block(detail::case_c_a2(nk), n, 4 * m, 4 * m));
    base = superimpose(base, embed_block(detail::case_c_a3(nk), n, 4 * m + 3, 4 * m + 3));
    check_diagonal_confinement(base, {0, 1, 2, n - 2, n - 1});
    run_base = 12LL * m + 6;
    pairs = consecutive_pairs_from(3, 2 * p);
  }

  check_support_plan(base, run_base + 1, nk - (n == 30 || n <= 26 ? 6 : 12), nk);
  return apply_hamilton_fills(std::move(base), n, p, run_base, pairs, lead);
}

SparseSquareArray build_case_d(int n, int k) {
  require_case(n, k, CaseVerdict::case_d);
  int m = (n - 1) / 4;
  int p = (k - 5) / 4;

  if (n == 9) return get_fixture("H(9;5)").array;
  if (n == 13 && k == 9) return repaired_h13_9().repaired_full;

  SparseSquareArray a = detail::case_d_base(n);
  if (p > 0) {
    std::vector<CellSet> cycles{detail::case_d_hamilton(m)};
    for (auto [d1, d2] : detail::case_d_diagonal_pairs(m))
      cycles.push_back(diagonal_pair(n, d1, d2));
    if (cycles.size() < 2u * p) throw error(errc::internal, "not enough cycles for k");
    for (int j = 1; j <= p; ++j) a = augment_crucial(a, cycles[2 * j - 2], cycles[2 * j - 1]);
  }
  return a;
}

SparseSquareArray build_case_e(int n, int k) {
  require_case(n, k, CaseVerdict::case_e);
  int m = (n - 2) / 4;
  int p = (k - 1) / 4;
  int q = 2 * m + 1;
  const std::int64_t nk = static_cast<std::int64_t>(n) * k;

  if (n == 6) return get_fixture("H(6;5)").array;

  SparseSquareArray a1(q);
  if (m == 2)
    a1 = get_fixture("A1_m2", k).array;
  else if (m == 3)
    a1 = get_fixture("A1_m3", k).array;
  else
    a1 = detail::case_e_a1(m, k);

  SparseSquareArray base =
      superimpose(embed_block(detail::case_e_a0(m), n, 0, 0), embed_block(a1, n, q, q));

  std::int64_t run_lo = 16LL * m + 9;
  std::int64_t run_hi = nk - 4 * m - 2;
  check_support_plan(base, run_lo, run_hi, nk);

  if (p > 1) {
    std::vector<CellSet> factors = detail::case_e_two_factors(n, k);
    if (factors.size() < 2u * (p - 1)) throw error(errc::internal, "not enough 2-factors for k");
    for (int j = 1; j <= p - 1; ++j) {
      RunPair runs;
      runs.v = 16LL * m + 8 + static_cast<std::int64_t>(j - 1) * 4 * n;
      runs.u = runs.v + n;
      runs.t = runs.u + n;
      runs.s = runs.t + n;
      base = superimpose(base, fill_twofactor_pair(n, factors[2 * j - 2], factors[2 * j - 1], runs));
    }
  }
  return base;
}

GenerateResult generate(long long n, long long k) {
  GenerateResult res;
  res.classification = classify(n, k);
  if (!res.classification.in_scope()) return res;
  int ni = static_cast<int>(n), ki = static_cast<int>(k);
  SparseSquareArray a(1);
  switch (res.classification.verdict) {
    case CaseVerdict::case_a: a = build_case_a(ni, ki); break;
    case CaseVerdict::case_b: a = build_case_b(ni, ki); break;
    case CaseVerdict::case_c: a = build_case_c(ni, ki); break;
    case CaseVerdict::case_d: a = build_case_d(ni, ki); break;
    case CaseVerdict::case_e: a = build_case_e(ni, ki); break;
    default: throw error(errc::internal, "unreachable");
  }
  VerificationReport rep = verify_heffter(a, ki);
  if (!rep.valid())
    throw error(errc::internal, "construction for (" + std::to_string(n) + "," +
                                    std::to_string(k) + ") failed certification: " +
                                    rep.violations.front().message);
  res.array = std::move(a);
  return res;
}

// ---------------------------------------------------------------------------
// H(13;9) fixture repair.

namespace {

H13Repair compute_h13_repair() {
  Fixture fx = get_fixture("H(13;9)");
  const int n = 13, kb = 5;
  const std::int64_t target = 2LL * n * kb + 1;  // 131, every line of the base
  H13Repair rep;
  rep.printed_base = fx.array;

  SparseSquareArray::CellMap cells = fx.array.cells();

  // Numeric repair step 1: one row and one column hold six cells; the cell at
  // their intersection is spurious.
  auto line_fills = [&]() {
    std::pair<std::vector<int>, std::vector<int>> f{std::vector<int>(n + 1, 0),
                                                    std::vector<int>(n + 1, 0)};
    for (const auto& [p, v] : cells) {
      ++f.first[p.row];
      ++f.second[p.col];
    }
    return f;
  };
  auto [rf, cf] = line_fills();
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      if (rf[r] > kb && cf[c] > kb && cells.count({r, c})) {
        rep.notes.push_back("removed spurious cell (" + std::to_string(r) + "," +
                            std::to_string(c) + ") = " + std::to_string(cells[{r, c}]));
        cells.erase({r, c});
        --rf[r], --cf[c];
      }
    }
  }

  // Step 2: replace duplicated magnitudes with missing ones. The suspects are
  // exactly the cells holding a duplicated value; try each substitution and
  // keep the first (row-major, ascending magnitude, positive sign first) that
  // restores every line sum to +131 and the support to {1..65}.
  std::map<std::int64_t, int> mult;
  for (const auto& [p, v] : cells) ++mult[v < 0 ? -v : v];
  std::vector<Position> suspects;
  for (const auto& [p, v] : cells)
    if (mult[v < 0 ? -v : v] > 1) suspects.push_back(p);
  std::vector<std::int64_t> missing;
  for (std::int64_t x = 1; x <= static_cast<std::int64_t>(n) * kb; ++x)
    if (!mult.count(x)) missing.push_back(x);

  auto all_lines_ok = [&]() {
    std::vector<std::int64_t> rs(n + 1, 0), cs(n + 1, 0);
    for (const auto& [p, v] : cells) {
      rs[p.row] += v;
      cs[p.col] += v;
    }
    for (int i = 1; i <= n; ++i)
      if (rs[i] != target || cs[i] != target) return false;
    std::map<std::int64_t, int> m2;
    for (const auto& [p, v] : cells) ++m2[v < 0 ? -v : v];
    if (static_cast<std::int64_t>(m2.size()) != static_cast<std::int64_t>(n) * kb) return false;
    for (const auto& [x, c] : m2)
      if (c != 1 || x > n * kb) return false;
    return true;
  };

  std::vector<std::string> subs;
  auto try_assign = [&](auto&& self, std::size_t idx, std::uint64_t used) -> bool {
    if (idx == suspects.size()) return all_lines_ok();
    Position p = suspects[idx];
    std::int64_t orig = cells[p];
    if (self(self, idx + 1, used)) return true;  // keep as printed
    for (std::size_t mi = 0; mi < missing.size(); ++mi) {
      if (used & (1ULL << mi)) continue;
      for (int sign : {+1, -1}) {
        cells[p] = sign * missing[mi];
        if (self(self, idx + 1, used | (1ULL << mi))) {
          subs.push_back("cell (" + std::to_string(p.row) + "," + std::to_string(p.col) +
                         "): " + std::to_string(orig) + " -> " + std::to_string(cells[p]));
          return true;
        }
      }
    }
    cells[p] = orig;
    return false;
  };
  if (!try_assign(try_assign, 0, 0))
    throw error(errc::internal, "numeric repair of H(13;9) found no solution");
  rep.notes.insert(rep.notes.end(), subs.rbegin(), subs.rend());

  rep.repaired_base = SparseSquareArray(n);
  for (const auto& [p, v] : cells) rep.repaired_base.set(p, v);

  // Mask repair: one mask lacks a cell whose row and column are forced; that
  // slot is occupied by the other mask, which then needs a single-cell move.
  CellSet h = fx.masks.at("H");
  CellSet k = fx.masks.at("K");
  bool reassigned = false;
  for (CellSet* mask : {&h, &k}) {
    if (mask->cells.size() == 2u * n) continue;
    if (mask->cells.size() != 2u * n - 1)
      throw error(errc::internal, "mask is short by more than one cell");
    std::vector<int> mr(n + 1, 0), mc(n + 1, 0);
    for (Position p : mask->cells) ++mr[p.row], ++mc[p.col];
    int fr = 0, fc = 0;
    for (int i = 1; i <= n; ++i) {
      if (mr[i] < 2) fr = i;
      if (mc[i] < 2) fc = i;
    }
    Position forced{fr, fc};
    if (rep.repaired_base.filled(forced)) continue;
    CellSet* other = mask == &k ? &h : &k;
    if (other->contains(forced)) {
      // The slot belongs to this cycle; the other one gives it up exactly
      // once and is mended by a single-cell move below.
      if (reassigned || other->cells.size() != 2u * n) continue;
      other->cells.erase(forced);
      reassigned = true;
      rep.notes.push_back("mask cell (" + std::to_string(fr) + "," + std::to_string(fc) +
                          ") reassigned between the two cycles");
    }
    mask->cells.insert(forced);
  }
  for (CellSet* mask : {&h, &k}) {
    if (is_hamilton(*mask)) continue;
    std::vector<int> mr(n + 1, 0), mc(n + 1, 0);
    for (Position p : mask->cells) ++mr[p.row], ++mc[p.col];
    int fr = 0, fc = 0;
    for (int i = 1; i <= n; ++i) {
      if (mr[i] < 2) fr = i;
      if (mc[i] < 2) fc = i;
    }
    CellSet* other = mask == &h ? &k : &h;
    auto free_cell = [&](Position p) {
      return !rep.repaired_base.filled(p) && !other->contains(p) && !mask->contains(p);
    };
    bool fixed = false;
    for (Position p : std::set<Position>(mask->cells)) {
      Position add1{p.row, fc}, add2{fr, p.col};
      if (!free_cell(add1) || !free_cell(add2)) continue;
      CellSet candidate = *mask;
      candidate.cells.erase(p);
      candidate.cells.insert(add1);
      candidate.cells.insert(add2);
      if (is_hamilton(candidate)) {
        rep.notes.push_back("mask cell (" + std::to_string(p.row) + "," + std::to_string(p.col) +
                            ") moved to (" + std::to_string(add1.row) + "," +
                            std::to_string(add1.col) + ") and (" + std::to_string(add2.row) +
                            "," + std::to_string(add2.col) + ")");
        *mask = candidate;
        fixed = true;
        break;
      }
    }
    if (!fixed) throw error(errc::internal, "mask repair of H(13;9) found no single move");
  }
  rep.cycle_h = h;
  rep.cycle_k = k;
  rep.repaired_full = augment_crucial(rep.repaired_base, h, k);
  return rep;
}

}  // namespace

const H13Repair& repaired_h13_9() {
  static const H13Repair rep = compute_h13_repair();
  return rep;
}

}  // namespace heffter
