#include <doctest.h>

#include "heffter/fixtures.hpp"
#include "heffter/types.hpp"

using namespace heffter;

TEST_CASE("wrap_index replaces 0 by n") {
  CHECK(wrap_index(0, 9) == 9);
  CHECK(wrap_index(9, 9) == 9);
  CHECK(wrap_index(10, 9) == 1);
  CHECK(wrap_index(-1, 9) == 8);
  CHECK(wrap_index(1 + 8, 9) == 9);  // (1,2) on D_8 comes from r=2: 2+8 = 10 -> 1
}

TEST_CASE("set rejects zeros, collisions and out-of-range cells") {
  SparseSquareArray a(3);
  a.set({1, 1}, 5);
  CHECK_THROWS_WITH_AS(a.set({1, 1}, 2), doctest::Contains("filled twice"), error);
  CHECK_THROWS_AS(a.set({1, 2}, 0), error);
  CHECK_THROWS_AS(a.set({0, 1}, 1), error);
  CHECK_THROWS_AS(a.set({1, 4}, 1), error);
}

TEST_CASE("shift adds toward the sign") {
  SparseSquareArray a(2);
  a.set({1, 1}, 3);
  a.set({1, 2}, -5);
  SparseSquareArray b = shift(a, 2);
  CHECK(b.at({1, 1}) == 5);
  CHECK(b.at({1, 2}) == -7);
  CHECK(shift(a, 0) == a);
  CHECK(support(b) == SupportSet{5, 7});
}

TEST_CASE("support shifts by z") {
  SparseSquareArray a(4);
  a.set({1, 1}, 1);
  a.set({2, 3}, -9);
  a.set({4, 4}, 16);
  for (std::int64_t z : {0, 1, 7, 100}) {
    SupportSet expect;
    for (std::int64_t v : support(a)) expect.insert(v + z);
    CHECK(support(shift(a, z)) == expect);
    CHECK(shift(a, z).cell_count() == a.cell_count());
  }
}

TEST_CASE("negate is an involution and flips line sums") {
  SparseSquareArray a(2);
  a.set({1, 1}, 3);
  CHECK(negate(a).at({1, 1}) == -3);
  CHECK(negate(negate(a)) == a);

  SparseSquareArray h = get_fixture("H(15;6)").array;
  SparseSquareArray neg = negate(h);
  CHECK(support(neg) == support(h));
  for (int r = 1; r <= 15; ++r) CHECK(neg.row_sum(r) == -181);
}

TEST_CASE("superimpose unions disjoint arrays and rejects collisions") {
  SparseSquareArray a(3), b(3);
  a.set({1, 1}, 1);
  b.set({2, 2}, -2);
  SparseSquareArray u = superimpose(a, b);
  CHECK(u.cell_count() == 2);
  CHECK(u.row_sum(1) == a.row_sum(1));
  CHECK(u.row_sum(2) == b.row_sum(2));

  SparseSquareArray c(3);
  c.set({1, 1}, 7);
  CHECK_THROWS_WITH_AS(superimpose(a, c), doctest::Contains("filled twice"), error);

  // commutative and associative on pairwise-disjoint operands
  SparseSquareArray d(3);
  d.set({3, 3}, 9);
  CHECK(superimpose(a, b) == superimpose(b, a));
  CHECK(superimpose(superimpose(a, b), d) == superimpose(a, superimpose(b, d)));
}

TEST_CASE("embed_block offsets cells and checks bounds") {
  SparseSquareArray block(3);
  block.set({1, 1}, 4);
  block.set({3, 3}, -6);
  SparseSquareArray big = embed_block(block, 19, 16, 16);
  CHECK(big.at({17, 17}) == 4);
  CHECK(big.at({19, 19}) == -6);
  CHECK(embed_block(block, 3, 0, 0) == block);
  CHECK_THROWS_AS(embed_block(block, 4, 2, 2), error);
}
