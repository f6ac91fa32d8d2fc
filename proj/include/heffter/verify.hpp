#pragma once

#include <vector>

#include "heffter/types.hpp"

namespace heffter {

// Certification against the defining clauses: square shape, k filled cells
// per row and per column, every line sum divisible by 2nk+1, and exactly one
// of {x, -x} present for each 1 <= x <= nk. The verifier recomputes
// everything from raw cells and collects every violation (no short-circuit).

struct Violation {
  std::string clause;   // stable identifier, e.g. "row-fill-count"
  std::string message;  // human-readable detail
};

struct VerificationReport {
  int n = 0;
  int k = 0;
  std::int64_t modulus = 0;  // 2nk+1
  bool integer_mode = false;

  std::vector<int> row_fill, col_fill;              // index 0 unused
  std::vector<std::int64_t> row_sums, col_sums;     // exact integers
  std::vector<std::int64_t> row_residues, col_residues;  // in [0, modulus)
  std::vector<std::int64_t> missing;                // magnitudes absent from support
  std::vector<std::pair<std::int64_t, int>> duplicated;  // magnitude, multiplicity

  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

// Full Heffter check with the expected per-line fill k.
VerificationReport verify_heffter(const SparseSquareArray& a, int k);

// Integer variant: line sums must equal 0 exactly (support and fill clauses
// unchanged).
VerificationReport verify_integer_heffter(const SparseSquareArray& a, int k);

// Sub-block contract: every row and column sums (in the integers) to
// expected_line_sum and the support set equals expected_support. Duplicated
// magnitudes are violations; fill counts are not checked.
VerificationReport verify_block(const SparseSquareArray& a, std::int64_t expected_line_sum,
                                const SupportSet& expected_support);

}  // namespace heffter
