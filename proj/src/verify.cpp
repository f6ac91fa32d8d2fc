#include "heffter/verify.hpp"

namespace heffter {

namespace {

std::int64_t residue(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

void check_lines(const SparseSquareArray& a, VerificationReport& rep) {
  int n = a.order();
  rep.row_fill.assign(n + 1, 0);
  rep.col_fill.assign(n + 1, 0);
  rep.row_sums.assign(n + 1, 0);
  rep.col_sums.assign(n + 1, 0);
  for (const auto& [p, v] : a.cells()) {
    ++rep.row_fill[p.row];
    ++rep.col_fill[p.col];
    rep.row_sums[p.row] += v;
    rep.col_sums[p.col] += v;
  }
  rep.row_residues.assign(n + 1, 0);
  rep.col_residues.assign(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    rep.row_residues[i] = residue(rep.row_sums[i], rep.modulus);
    rep.col_residues[i] = residue(rep.col_sums[i], rep.modulus);
  }

  for (int i = 1; i <= n; ++i) {
    if (rep.row_fill[i] != rep.k)
      rep.violations.push_back({"row-fill-count", "row " + std::to_string(i) + " holds " +
                                                      std::to_string(rep.row_fill[i]) +
                                                      " cells, expected " + std::to_string(rep.k)});
    if (rep.col_fill[i] != rep.k)
      rep.violations.push_back({"col-fill-count", "column " + std::to_string(i) + " holds " +
                                                      std::to_string(rep.col_fill[i]) +
                                                      " cells, expected " + std::to_string(rep.k)});
  }
  for (int i = 1; i <= n; ++i) {
    if (rep.integer_mode) {
      if (rep.row_sums[i] != 0)
        rep.violations.push_back({"row-sum-nonzero", "row " + std::to_string(i) + " sums to " +
                                                         std::to_string(rep.row_sums[i])});
      if (rep.col_sums[i] != 0)
        rep.violations.push_back({"col-sum-nonzero", "column " + std::to_string(i) + " sums to " +
                                                         std::to_string(rep.col_sums[i])});
    } else {
      if (rep.row_residues[i] != 0)
        rep.violations.push_back(
            {"row-sum-residue", "row " + std::to_string(i) + " sums to " +
                                    std::to_string(rep.row_sums[i]) + ", residue " +
                                    std::to_string(rep.row_residues[i]) + " (mod " +
                                    std::to_string(rep.modulus) + ")"});
      if (rep.col_residues[i] != 0)
        rep.violations.push_back(
            {"col-sum-residue", "column " + std::to_string(i) + " sums to " +
                                    std::to_string(rep.col_sums[i]) + ", residue " +
                                    std::to_string(rep.col_residues[i]) + " (mod " +
                                    std::to_string(rep.modulus) + ")"});
    }
  }
}

void check_support(const SparseSquareArray& a, std::int64_t limit, VerificationReport& rep) {
  auto mult = support_multiplicity(a);
  for (std::int64_t x = 1; x <= limit; ++x) {
    if (!mult.count(x)) {
      rep.missing.push_back(x);
      rep.violations.push_back(
          {"support-missing", "neither " + std::to_string(x) + " nor -" + std::to_string(x) +
                                  " appears (1 <= x <= " + std::to_string(limit) + ")"});
    }
  }
  for (const auto& [x, c] : mult) {
    if (c > 1) {
      rep.duplicated.push_back({x, c});
      rep.violations.push_back({"support-duplicate", "magnitude " + std::to_string(x) +
                                                         " appears " + std::to_string(c) +
                                                         " times"});
    }
    if (x > limit)
      rep.violations.push_back({"support-out-of-range", "magnitude " + std::to_string(x) +
                                                            " exceeds nk = " +
                                                            std::to_string(limit)});
  }
}

VerificationReport verify_common(const SparseSquareArray& a, int k, bool integer_mode) {
  if (k < 0) throw error(errc::invalid_argument, "expected fill count must be nonnegative");
  VerificationReport rep;
  rep.n = a.order();
  rep.k = k;
  rep.modulus = 2LL * rep.n * k + 1;
  rep.integer_mode = integer_mode;
  check_lines(a, rep);
  check_support(a, static_cast<std::int64_t>(rep.n) * k, rep);
  return rep;
}

}  // namespace

VerificationReport verify_heffter(const SparseSquareArray& a, int k) {
  return verify_common(a, k, false);
}

VerificationReport verify_integer_heffter(const SparseSquareArray& a, int k) {
  return verify_common(a, k, true);
}

VerificationReport verify_block(const SparseSquareArray& a, std::int64_t expected_line_sum,
                                const SupportSet& expected_support) {
  VerificationReport rep;
  rep.n = a.order();
  rep.k = -1;
  rep.modulus = 0;
  int n = a.order();
  rep.row_fill.assign(n + 1, 0);
  rep.col_fill.assign(n + 1, 0);
  rep.row_sums.assign(n + 1, 0);
  rep.col_sums.assign(n + 1, 0);
  for (const auto& [p, v] : a.cells()) {
    ++rep.row_fill[p.row];
    ++rep.col_fill[p.col];
    rep.row_sums[p.row] += v;
    rep.col_sums[p.col] += v;
  }
  for (int i = 1; i <= n; ++i) {
    if (rep.row_sums[i] != expected_line_sum)
      rep.violations.push_back({"row-sum", "row " + std::to_string(i) + " sums to " +
                                               std::to_string(rep.row_sums[i]) + ", expected " +
                                               std::to_string(expected_line_sum)});
    if (rep.col_sums[i] != expected_line_sum)
      rep.violations.push_back({"col-sum", "column " + std::to_string(i) + " sums to " +
                                               std::to_string(rep.col_sums[i]) + ", expected " +
                                               std::to_string(expected_line_sum)});
  }
  auto mult = support_multiplicity(a);
  for (std::int64_t x : expected_support) {
    if (!mult.count(x)) {
      rep.missing.push_back(x);
      rep.violations.push_back({"support-missing", "magnitude " + std::to_string(x) + " absent"});
    }
  }
  for (const auto& [x, c] : mult) {
    if (!expected_support.count(x))
      rep.violations.push_back(
          {"support-unexpected", "magnitude " + std::to_string(x) + " not declared"});
    if (c > 1) {
      rep.duplicated.push_back({x, c});
      rep.violations.push_back({"support-duplicate", "magnitude " + std::to_string(x) +
                                                         " appears " + std::to_string(c) +
                                                         " times"});
    }
  }
  return rep;
}

}  // namespace heffter
