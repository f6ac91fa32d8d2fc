#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "heffter/cycles.hpp"
#include "heffter/types.hpp"

namespace heffter {

enum class CaseVerdict {
  case_a,       // k = 2 (mod 4), n = 1,3 (mod 4)
  case_b,       // k = 3 (mod 4), n = 3 (mod 4)
  case_c,       // k = 3 (mod 4), n = 2 (mod 4)
  case_d,       // k = 1 (mod 4), n = 1 (mod 4)
  case_e,       // k = 1 (mod 4), n = 2 (mod 4)
  integer_case, // nk = 0,3 (mod 4): solved by classical integer constructions
  full_square,  // k = n
  invalid,      // parameters admit no H(n;k)
};

const char* verdict_name(CaseVerdict v);

struct CaseClassification {
  CaseVerdict verdict = CaseVerdict::invalid;
  std::string reason;
  bool in_scope() const {
    return verdict == CaseVerdict::case_a || verdict == CaseVerdict::case_b ||
           verdict == CaseVerdict::case_c || verdict == CaseVerdict::case_d ||
           verdict == CaseVerdict::case_e;
  }
};

// Exactly one verdict per (n, k). The five construction cases are the pairs
// with 3 <= k < n and nk = 1,2 (mod 4).
CaseClassification classify(long long n, long long k);

// Case builders. Every builder checks the classification first (wrong_case)
// and returns an array with k cells per line whose line sums vanish mod
// 2nk+1 and whose support is exactly {1..nk}.
SparseSquareArray build_case_a(int n, int k);
SparseSquareArray build_case_b(int n, int k);
SparseSquareArray build_case_c(int n, int k);
SparseSquareArray build_case_d(int n, int k);
SparseSquareArray build_case_e(int n, int k);

struct GenerateResult {
  CaseClassification classification;
  std::optional<SparseSquareArray> array;  // present iff classification is in scope
};

// Dispatch on classify. In-scope results are re-certified internally before
// they are returned.
GenerateResult generate(long long n, long long k);

// The stored H(13;9) fixture is defective as printed. This derives the
// minimal deterministic repair: a two-cell fix of the numeric base (a valid
// H(13;5)), completion of one mask cycle by its forced cell, a single-cell
// move in the other, and the assembled H(13;9).
struct H13Repair {
  SparseSquareArray printed_base{13};
  SparseSquareArray repaired_base{13};
  CellSet cycle_h;  // repaired "H" mask
  CellSet cycle_k;  // completed "K" mask
  SparseSquareArray repaired_full{13};
  std::vector<std::string> notes;
};

const H13Repair& repaired_h13_9();

// Internal building blocks, exposed for white-box tests.
namespace detail {

int remap_index(int i, int q);  // the confinement bijection on {1..q}, q odd

SparseSquareArray case_a_base(int n);                     // H(n;6), line sums 12n+1
SparseSquareArray case_b_a0_prime(int m);                 // (4m-7)^2 block, line sums 0
SparseSquareArray case_c_a0_prime(int m);                 // (4m-13)^2 block, line sums 0
SparseSquareArray remap_block(const SparseSquareArray&);  // apply remap_index to rows+cols
SparseSquareArray case_b_a1(int m);                       // 7x7 block, line sums 0
SparseSquareArray case_c_a1(int m);                       // 13x13 block, line sums 0
SparseSquareArray block_c(std::int64_t nk);               // 3x3, line sums 2nk+1
SparseSquareArray case_c_a2(std::int64_t nk);             // 3x3, line sums 0
SparseSquareArray case_c_a3(std::int64_t nk);             // 3x3, line sums 2nk+1
SparseSquareArray case_d_base(int n);                     // H(n;5), line sums 2n*5+1
CellSet case_d_hamilton(int m);                           // the reserved cycle for case D
std::vector<std::pair<int, int>> case_d_diagonal_pairs(int m);
SparseSquareArray case_e_a0(int m);                       // (2m+1)^2 block, line sums 0
SparseSquareArray case_e_a1(int m, int k);                // (2m+1)^2 block, line sums 2nk+1
CellSet case_e_h_cycle(int m);                            // n-cycle in subarray coordinates
CellSet case_e_k_cycle(int m);
std::vector<CellSet> case_e_two_factors(int n, int k);    // the 2m-2 disjoint 2-factors

}  // namespace detail

}  // namespace heffter
