#include <doctest.h>

#include <set>
#include <sstream>

#include "heffter/constructions.hpp"
#include "heffter/fixtures.hpp"
#include "heffter/verify.hpp"

using namespace heffter;

namespace {

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

// published corner block of the case B base at m = 4, before the remap
const char* kCaseB_A0Prime_m4 = R"(
16 32 . . . . . . -48
-33 -14 47 . . . . . .
. -18 -13 31 . . . . .
. . -34 -12 46 . . . .
. . . -19 -11 30 . . .
. . . . -35 -10 45 . .
. . . . . -20 -9 29 .
. . . . . . -36 15 21
17 . . . . . . -44 27
)";

// published corner block of the case C base at m = 7
const char* kCaseC_A0Prime_m7 = R"(
28 56 . . . . . . . . . . . . -84
-57 -26 83 . . . . . . . . . . . .
. -30 -25 55 . . . . . . . . . . .
. . -58 -24 82 . . . . . . . . . .
. . . -31 -23 54 . . . . . . . . .
. . . . -59 -22 81 . . . . . . . .
. . . . . -32 -21 53 . . . . . . .
. . . . . . -60 -20 80 . . . . . .
. . . . . . . -33 -19 52 . . . . .
. . . . . . . . -61 -18 79 . . . .
. . . . . . . . . -34 -17 51 . . .
. . . . . . . . . . -62 -16 78 . .
. . . . . . . . . . . -35 -15 50 .
. . . . . . . . . . . . -63 27 36
29 . . . . . . . . . . . . -77 48
)";

bool valid_for(const SparseSquareArray& a, int k, std::int64_t modulus) {
  VerificationReport rep = verify_heffter(a, k);
  return rep.valid() && rep.modulus == modulus;
}

}  // namespace

TEST_CASE("classify covers every verdict") {
  CHECK(classify(15, 6).verdict == CaseVerdict::case_a);
  CHECK(classify(19, 3).verdict == CaseVerdict::case_b);
  CHECK(classify(10, 7).verdict == CaseVerdict::case_c);
  CHECK(classify(17, 5).verdict == CaseVerdict::case_d);
  CHECK(classify(18, 5).verdict == CaseVerdict::case_e);
  CHECK(classify(12, 4).verdict == CaseVerdict::integer_case);
  CHECK(classify(4, 3).verdict == CaseVerdict::integer_case);  // nk = 12 = 0 (mod 4)
  CHECK(classify(5, 5).verdict == CaseVerdict::full_square);
  CHECK(classify(6, 7).verdict == CaseVerdict::invalid);
  CHECK(classify(2, 2).verdict == CaseVerdict::invalid);
  CHECK_FALSE(classify(12, 4).in_scope());
  CHECK(classify(15, 6).in_scope());
}

TEST_CASE("classification is total and consistent with the residues") {
  for (long long n = 1; n <= 61; ++n) {
    for (long long k = 1; k <= n + 2; ++k) {
      CaseClassification c = classify(n, k);
      if (k < 3 || k > n) {
        CHECK(c.verdict == CaseVerdict::invalid);
      } else if (k == n) {
        CHECK(c.verdict == CaseVerdict::full_square);
      } else if ((n * k) % 4 == 0 || (n * k) % 4 == 3) {
        CHECK(c.verdict == CaseVerdict::integer_case);
      } else {
        CHECK(c.in_scope());
      }
    }
  }
}

TEST_CASE("remap bijectivity and shape") {
  for (int m = 4; m <= 40; ++m) {
    int q = 4 * m - 7;
    std::set<int> images;
    for (int i = 1; i <= q; ++i) {
      int img = detail::remap_index(i, q);
      CHECK(img >= 1);
      CHECK(img <= q);
      images.insert(img);
    }
    CHECK(static_cast<int>(images.size()) == q);  // bijection
    for (int i = 1; i < (q + 1) / 2; ++i)         // odd images ascending
      CHECK(detail::remap_index(i, q) < detail::remap_index(i + 1, q));
    for (int i = (q + 1) / 2 + 1; i < q; ++i)     // even images descending
      CHECK(detail::remap_index(i, q) > detail::remap_index(i + 1, q));
  }
}

TEST_CASE("case A reproduces the published H(15;6)") {
  CHECK(build_case_a(15, 6) == get_fixture("H(15;6)").array);
}

TEST_CASE("case A base at n = 7") {
  SparseSquareArray a = build_case_a(7, 6);
  for (int i = 1; i <= 7; ++i) {
    CHECK(a.row_sum(i) == 85);
    CHECK(a.col_sum(i) == 85);
  }
  CHECK(valid_for(a, 6, 85));
}

TEST_CASE("case A with one augmentation") {
  CHECK(valid_for(build_case_a(13, 10), 10, 261));
}

TEST_CASE("case B corner block matches the published m = 4 display") {
  CHECK(detail::case_b_a0_prime(4) == parse_grid(kCaseB_A0Prime_m4, 9));
}

TEST_CASE("case B reproduces the published H(19;3)") {
  CHECK(build_case_b(19, 3) == get_fixture("H(19;3)").array);
}

TEST_CASE("case B small orders use the stored fixtures") {
  SparseSquareArray a = build_case_b(7, 3);
  CHECK(a == get_fixture("H(7;3)").array);
  for (int i = 5; i <= 7; ++i) CHECK(a.row_sum(i) == 43);
}

TEST_CASE("case B with fills") {
  CHECK(valid_for(build_case_b(11, 7), 7, 155));
  CHECK(valid_for(build_case_b(15, 11), 11, 331));
  CHECK(valid_for(build_case_b(19, 15), 15, 571));
  CHECK(valid_for(build_case_b(23, 3), 3, 139));
}

TEST_CASE("case B bases stay on the five carrier diagonals") {
  for (int n : {19, 23, 31, 43}) {
    SparseSquareArray a = build_case_b(n, 3);
    for (const auto& [p, v] : a.cells()) {
      int d = wrap_index(p.row - p.col, n) % n;
      CHECK((d == 0 || d == 1 || d == 2 || d == n - 1 || d == n - 2));
    }
  }
}

TEST_CASE("case C corner block matches the published m = 7 display") {
  CHECK(detail::case_c_a0_prime(7) == parse_grid(kCaseC_A0Prime_m7, 15));
}

TEST_CASE("case C small orders") {
  SparseSquareArray a = build_case_c(6, 3);
  CHECK(a == get_fixture("H(6;3)").array);
  CHECK(valid_for(build_case_c(10, 3), 3, 61));
  CHECK(valid_for(build_case_c(10, 7), 7, 141));
  CHECK(valid_for(build_case_c(14, 11), 11, 309));
}

TEST_CASE("case C special pairings at n = 26 and n = 30") {
  CHECK(valid_for(build_case_c(26, 7), 7, 365));
  CHECK(valid_for(build_case_c(26, 23), 23, 1197));
  CHECK(valid_for(build_case_c(30, 3), 3, 181));
  CHECK(valid_for(build_case_c(30, 7), 7, 421));
  CHECK(valid_for(build_case_c(30, 27), 27, 1621));
}

TEST_CASE("case C formula orders") {
  CHECK(valid_for(build_case_c(34, 3), 3, 205));
  CHECK(valid_for(build_case_c(34, 31), 31, 2109));
  CHECK(valid_for(build_case_c(38, 19), 19, 1445));
}

TEST_CASE("case D reproduces the published H(17;5)") {
  CHECK(build_case_d(17, 5) == get_fixture("H(17;5)").array);
}

TEST_CASE("case D small orders and augmentations") {
  SparseSquareArray a = build_case_d(9, 5);
  CHECK(a == get_fixture("H(9;5)").array);
  for (int i = 1; i <= 9; ++i) CHECK(a.row_sum(i) == 91);
  CHECK(valid_for(build_case_d(13, 5), 5, 131));
  CHECK(valid_for(build_case_d(17, 9), 9, 307));
  CHECK(valid_for(build_case_d(17, 13), 13, 443));
  CHECK(valid_for(build_case_d(21, 17), 17, 715));  // m = 5 pairing
  CHECK(valid_for(build_case_d(25, 21), 21, 1051)); // m = 6 pairing
}

TEST_CASE("the repaired H(13;9) passes and documents its changes") {
  const H13Repair& rep = repaired_h13_9();
  CHECK_FALSE(verify_heffter(rep.printed_base, 5).valid());
  CHECK(verify_heffter(rep.repaired_base, 5).valid());
  // the numeric repair lands exactly on the case D formula base
  CHECK(rep.repaired_base == detail::case_d_base(13));
  // the completed mask is the reserved case D cycle at m = 3
  CHECK(rep.cycle_k.cells == detail::case_d_hamilton(3).cells);
  CHECK(is_hamilton(rep.cycle_h));
  CHECK(cells_disjoint(rep.cycle_h, rep.cycle_k));
  CHECK(valid_for(rep.repaired_full, 9, 235));
  CHECK(rep.notes.size() >= 3);
  CHECK(build_case_d(13, 9) == rep.repaired_full);
}

TEST_CASE("case E reproduces the published H(18;5)") {
  CHECK(build_case_e(18, 5) == get_fixture("H(18;5)").array);
}

TEST_CASE("case E top block has zero line sums after the two swaps") {
  for (int m : {2, 3, 4, 7}) {
    CAPTURE(m);
    SparseSquareArray a0 = detail::case_e_a0(m);
    SupportSet declared;
    for (std::int64_t x = 2; x <= 4 * m + 2; x += 2) declared.insert(x);
    for (std::int64_t x = 4 * m + 3; x <= 12 * m + 6; ++x) declared.insert(x);
    CHECK(verify_block(a0, 0, declared).valid());
  }
}

TEST_CASE("case E across the block variants") {
  SparseSquareArray a6 = build_case_e(6, 5);
  CHECK(a6 == get_fixture("H(6;5)").array);
  CHECK(valid_for(build_case_e(10, 5), 5, 101));   // 5x5 table block
  CHECK(valid_for(build_case_e(10, 9), 9, 181));   // one 2-factor fill
  CHECK(valid_for(build_case_e(14, 9), 9, 253));   // 7x7 table block + 14-cycle
  CHECK(valid_for(build_case_e(14, 13), 13, 365));
  CHECK(valid_for(build_case_e(18, 13), 13, 469)); // formula block
  CHECK(valid_for(build_case_e(22, 21), 21, 925)); // m = 5 extra pair
  CHECK(valid_for(build_case_e(26, 25), 25, 1301));// m = 6 pairing family
}

TEST_CASE("generate dispatches and certifies") {
  GenerateResult g1 = generate(19, 3);
  REQUIRE(g1.array.has_value());
  CHECK(g1.classification.verdict == CaseVerdict::case_b);

  GenerateResult g2 = generate(12, 4);
  CHECK_FALSE(g2.array.has_value());
  CHECK(g2.classification.verdict == CaseVerdict::integer_case);

  GenerateResult g3 = generate(4, 3);
  CHECK_FALSE(g3.array.has_value());
  CHECK(g3.classification.verdict == CaseVerdict::integer_case);

  GenerateResult g4 = generate(26, 7);
  REQUIRE(g4.array.has_value());
  CHECK(verify_heffter(*g4.array, 7).valid());
}

TEST_CASE("builders reject out-of-case parameters") {
  CHECK_THROWS_AS(build_case_a(15, 7), error);
  CHECK_THROWS_AS(build_case_b(19, 5), error);
  CHECK_THROWS_AS(build_case_c(19, 3), error);
  CHECK_THROWS_AS(build_case_d(18, 5), error);
  CHECK_THROWS_AS(build_case_e(17, 5), error);
}

TEST_CASE("mini sweep up to n = 32") {
  for (long long n = 4; n <= 32; ++n) {
    for (long long k = 3; k < n; ++k) {
      CaseClassification c = classify(n, k);
      if (!c.in_scope()) continue;
      CAPTURE(n);
      CAPTURE(k);
      GenerateResult g = generate(n, k);
      REQUIRE(g.array.has_value());
      VerificationReport rep = verify_heffter(*g.array, static_cast<int>(k));
      REQUIRE(rep.valid());
    }
  }
}
