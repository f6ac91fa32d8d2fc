#include <doctest.h>

#include <sstream>

#include "heffter/constructions.hpp"
#include "heffter/fillers.hpp"
#include "heffter/verify.hpp"

using namespace heffter;

namespace {

// The 9x9 demonstration of the 8n+2 filler: S1 = D_0 u D_8, S2 the remaining
// filled cells.
const char* kBaconDemo = R"(
1 19 18 . . . 36 . .
34 17 21 . . . 2 . .
. . 15 23 10 26 . . .
4 . . 13 25 . . . 32
. 14 . . 11 27 . 22 .
. . 20 . . 9 29 16 .
. . . 30 . . 7 31 6
. 24 . . . 12 . 5 33
35 . . 8 28 . . . 3
)";

SparseSquareArray parse_grid(const char* grid, int n) {
  SparseSquareArray a(n);
  std::istringstream in(grid);
  std::string tok;
  int idx = 0;
  while (in >> tok) {
    int r = idx / n + 1, c = idx % n + 1;
    ++idx;
    if (tok != ".") a.set({r, c}, std::stoll(tok));
  }
  REQUIRE(idx == n * n);
  return a;
}

void check_shiftable_fill(const SparseSquareArray& a, int n) {
  for (int i = 1; i <= n; ++i) {
    CHECK(a.row_sum(i) == 0);
    CHECK(a.col_sum(i) == 0);
    int pos = 0, neg = 0;
    for (const auto& [p, v] : a.cells()) {
      if (p.row != i) continue;
      (v > 0 ? pos : neg)++;
    }
    CHECK(pos == 2);
    CHECK(neg == 2);
  }
}

}  // namespace

TEST_CASE("fill_bacon reproduces the published 9x9 demonstration") {
  SparseSquareArray expect = parse_grid(kBaconDemo, 9);
  CellSet s1 = cell_union(diagonal(9, 0), diagonal(9, 8));
  CellSet s2{9, {}};
  for (const auto& [p, v] : expect.cells())
    if (!s1.contains(p)) s2.cells.insert(p);
  REQUIRE(is_hamilton(s2));

  SparseSquareArray got = fill_bacon(9, s1, s2);
  CHECK(got == expect);
  for (int i = 1; i <= 9; ++i) {
    CHECK(got.row_sum(i) == 74);
    CHECK(got.col_sum(i) == 74);
  }
}

TEST_CASE("fill_bacon support and sums on diagonal pairs") {
  CellSet s1 = cell_union(diagonal(5, 0), diagonal(5, 1));
  CellSet s2 = cell_union(diagonal(5, 2), diagonal(5, 3));
  SparseSquareArray a = fill_bacon(5, s1, s2);
  SupportSet expect;
  for (std::int64_t x = 1; x <= 20; ++x) expect.insert(x);
  CHECK(support(a) == expect);
  for (int i = 1; i <= 5; ++i) {
    CHECK(a.row_sum(i) == 42);
    CHECK(a.col_sum(i) == 42);
  }
}

TEST_CASE("fill_bacon rejects bad cycle inputs") {
  CellSet s1 = cell_union(diagonal(6, 0), diagonal(6, 1));
  CHECK_THROWS_AS(fill_bacon(6, s1, s1), error);                             // not disjoint
  CellSet split = cell_union(diagonal(6, 2), diagonal(6, 4));                // gcd 2
  CHECK_THROWS_WITH_AS(fill_bacon(6, s1, split), doctest::Contains("Hamilton"), error);
}

TEST_CASE("fill_hamilton_pair fills two runs with zero sums") {
  CellSet s1 = cell_union(diagonal(5, 1), diagonal(5, 2));
  CellSet s2 = cell_union(diagonal(5, 3), diagonal(5, 4));
  SparseSquareArray a = fill_hamilton_pair(5, s1, s2, {.s = 21, .t = 10});
  SupportSet expect;
  for (std::int64_t i = 1; i <= 10; ++i) {
    expect.insert(10 + i);
    expect.insert(21 + i);
  }
  CHECK(support(a) == expect);
  check_shiftable_fill(a, 5);

  // shifting a shiftable fill preserves the zero sums
  for (std::int64_t z : {1, 2, 5, 17, 1000}) {
    SparseSquareArray b = shift(a, z);
    for (int i = 1; i <= 5; ++i) {
      CHECK(b.row_sum(i) == 0);
      CHECK(b.col_sum(i) == 0);
    }
  }
}

TEST_CASE("fill_hamilton_pair run spacing") {
  CellSet s1 = cell_union(diagonal(5, 1), diagonal(5, 2));
  CellSet s2 = cell_union(diagonal(5, 3), diagonal(5, 4));
  CHECK_THROWS_WITH_AS(fill_hamilton_pair(5, s1, s2, {.s = 10, .t = 10}),
                       doctest::Contains("t + 2n"), error);
  CHECK_NOTHROW(fill_hamilton_pair(5, s1, s2, {.s = 20, .t = 10}));  // equality accepted
}

TEST_CASE("fill_twofactor_pair fills four runs with zero sums") {
  CellSet s1 = cell_union(diagonal(6, 0), diagonal(6, 2));  // two 6-cycles
  CellSet s2 = cell_union(diagonal(6, 1), diagonal(6, 3));  // two 6-cycles
  RunPair runs{.s = 22, .t = 15, .u = 8, .v = 1};
  SparseSquareArray a = fill_twofactor_pair(6, s1, s2, runs);
  SupportSet expect;
  for (std::int64_t i = 1; i <= 6; ++i) {
    expect.insert(1 + i);
    expect.insert(8 + i);
    expect.insert(15 + i);
    expect.insert(22 + i);
  }
  CHECK(support(a) == expect);
  check_shiftable_fill(a, 6);

  // s+n sits in the first cell of S1's leading cycle, -(t+n) beside it
  CHECK(a.at({1, 1}) == 22 + 6);
  CHECK(a.at({1, 6}) == -(15 + 6));
}

TEST_CASE("fill_twofactor_pair input validation") {
  CellSet s1 = cell_union(diagonal(6, 0), diagonal(6, 2));
  CellSet s2 = cell_union(diagonal(6, 1), diagonal(6, 3));
  RunPair runs{.s = 22, .t = 15, .u = 8, .v = 1};
  CellSet odd1 = cell_union(diagonal(5, 0), diagonal(5, 1));
  CellSet odd2 = cell_union(diagonal(5, 2), diagonal(5, 3));
  CHECK_THROWS_AS(fill_twofactor_pair(5, odd1, odd2, runs), error);  // odd order
  CellSet ham = cell_union(diagonal(6, 0), diagonal(6, 1));          // one 12-cycle
  CellSet other = cell_union(diagonal(6, 2), diagonal(6, 4));
  CHECK_THROWS_WITH_AS(fill_twofactor_pair(6, ham, other, runs),
                       doctest::Contains("two n-cycles"), error);
  CHECK_THROWS_WITH_AS(fill_twofactor_pair(6, s1, s2, {.s = 20, .t = 15, .u = 8, .v = 1}),
                       doctest::Contains("RunSpacing"), error);
}

TEST_CASE("augment_crucial grows an H(15;6) into an H(15;10)") {
  SparseSquareArray base = detail::case_a_base(15);
  CellSet s1 = cell_union(diagonal(15, 7), diagonal(15, 8));
  CellSet s2 = cell_union(diagonal(15, 9), diagonal(15, 10));
  SparseSquareArray grown = augment_crucial(base, s1, s2);

  VerificationReport rep = verify_heffter(grown, 10);
  CHECK(rep.valid());
  for (int i = 1; i <= 15; ++i) CHECK(grown.row_sum(i) == 301);

  // the added cells carry exactly {nk+1 .. n(k+4)}
  SupportSet added;
  for (const auto& [p, v] : grown.cells())
    if (!base.filled(p)) added.insert(v < 0 ? -v : v);
  SupportSet expect;
  for (std::int64_t x = 91; x <= 150; ++x) expect.insert(x);
  CHECK(added == expect);
}

TEST_CASE("augment_crucial demands exact positive line sums") {
  SparseSquareArray bad = negate(detail::case_a_base(15));  // sums -(2nk+1)
  CellSet s1 = cell_union(diagonal(15, 7), diagonal(15, 8));
  CellSet s2 = cell_union(diagonal(15, 9), diagonal(15, 10));
  CHECK_THROWS_AS(augment_crucial(bad, s1, s2), error);
}

TEST_CASE("repeated augmentation keeps the Heffter property") {
  SparseSquareArray a = detail::case_a_base(17);
  int k = 6;
  // two applications: 17x17 leaves diagonals 7..16 free
  for (int j = 0; j < 2; ++j) {
    CellSet s1 = cell_union(diagonal(17, 7 + 4 * j), diagonal(17, 8 + 4 * j));
    CellSet s2 = cell_union(diagonal(17, 9 + 4 * j), diagonal(17, 10 + 4 * j));
    a = augment_crucial(a, s1, s2);
    k += 4;
    CHECK(verify_heffter(a, k).valid());
    for (int i = 1; i <= 17; ++i) CHECK(a.row_sum(i) == 2 * 17 * k + 1);
  }
}
