// Acceptance suite. Runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <numeric>
#include <vector>

#include "heffter/constructions.hpp"
#include "heffter/fillers.hpp"
#include "heffter/fixtures.hpp"
#include "heffter/oracle.hpp"
#include "heffter/verify.hpp"

using namespace heffter;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int g_failed = 0;

void report(int criterion, const char* title, bool pass, const std::string& detail) {
  std::printf("%s  criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, title,
              detail.c_str());
  if (!pass) ++g_failed;
}

// deterministic pseudo-random stream (splitmix64)
struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// ---------------------------------------------------------------------------

bool criterion1() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;

  struct Row {
    const char* name;
    int k;
    std::int64_t modulus;
  };
  for (const Row& row : std::initializer_list<Row>{{"H(7;3)", 3, 43},
                                                   {"H(6;3)", 3, 37},
                                                   {"H(6;5)", 5, 61},
                                                   {"H(9;5)", 5, 91},
                                                   {"H(30;3)", 3, 181}}) {
    VerificationReport rep = verify_heffter(get_fixture(row.name).array, row.k);
    if (!rep.valid() || rep.modulus != row.modulus) {
      ok = false;
      detail += std::string(row.name) + " failed; ";
    }
  }

  // H(13;9) as printed: certification fails and the defect list is emitted.
  Fixture h13 = get_fixture("H(13;9)");
  VerificationReport printed9 = verify_heffter(h13.array, 9);
  if (printed9.valid() || printed9.modulus != 235) {
    ok = false;
    detail += "printed H(13;9) unexpectedly certified; ";
  }
  VerificationReport printed5 = verify_heffter(h13.array, 5);
  std::printf("  H(13;9) as printed, checked against its base fill (k = 5):\n");
  for (const auto& v : printed5.violations)
    std::printf("    %s: %s\n", v.clause.c_str(), v.message.c_str());

  const H13Repair& rep = repaired_h13_9();
  std::printf("  repair applied:\n");
  for (const auto& note : rep.notes) std::printf("    %s\n", note.c_str());
  VerificationReport repaired = verify_heffter(rep.repaired_full, 9);
  if (!repaired.valid() || repaired.modulus != 235) {
    ok = false;
    detail += "repaired H(13;9) does not certify; ";
  }

  double dt = seconds_since(t0);
  if (dt >= 1.0) {
    ok = false;
    detail += "over the 1 s budget; ";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f s", dt);
  report(1, "fixture certification", ok, detail.empty() ? buf : detail);
  return ok;
}

bool criterion2() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  struct Row {
    int n, k;
    const char* fixture;
  };
  for (const Row& row : std::initializer_list<Row>{
           {15, 6, "H(15;6)"}, {19, 3, "H(19;3)"}, {17, 5, "H(17;5)"}, {18, 5, "H(18;5)"}}) {
    GenerateResult g = generate(row.n, row.k);
    if (!g.array || !(*g.array == get_fixture(row.fixture).array)) {
      ok = false;
      detail += std::string(row.fixture) + " not reproduced cell-for-cell; ";
    }
  }
  double dt = seconds_since(t0);
  if (dt >= 1.0) {
    ok = false;
    detail += "over the 1 s budget; ";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f s", dt);
  report(2, "printed-example reproduction", ok, detail.empty() ? buf : detail);
  return ok;
}

bool criterion3() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  int in_scope = 0, valid = 0, skipped = 0;
  for (long long n = 4; n <= 61; ++n) {
    for (long long k = 3; k <= n; ++k) {
      CaseClassification c = classify(n, k);
      if (k == n) {
        if (c.verdict != CaseVerdict::full_square) {
          ok = false;
          detail += "(" + std::to_string(n) + "," + std::to_string(k) + ") not FullSquare; ";
        }
        ++skipped;
        continue;
      }
      long long residue = (n * k) % 4;
      if (residue == 1 || residue == 2) {
        if (!c.in_scope()) {
          ok = false;
          detail += "(" + std::to_string(n) + "," + std::to_string(k) + ") misclassified; ";
          continue;
        }
        ++in_scope;
        try {
          GenerateResult g = generate(n, k);
          if (g.array && verify_heffter(*g.array, static_cast<int>(k)).valid()) ++valid;
        } catch (const std::exception& e) {
          ok = false;
          detail += "(" + std::to_string(n) + "," + std::to_string(k) + ") threw: " + e.what() +
                    "; ";
        }
      } else {
        if (c.verdict != CaseVerdict::integer_case && c.verdict != CaseVerdict::full_square) {
          ok = false;
          detail += "(" + std::to_string(n) + "," + std::to_string(k) +
                    ") should be out of scope; ";
        }
        ++skipped;
      }
    }
  }
  if (valid != in_scope) ok = false;
  double dt = seconds_since(t0);
  if (dt >= 60.0) {
    ok = false;
    detail += "over the 60 s budget; ";
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d/%d in-scope pairs valid, %d out-of-scope, %.2f s", valid,
                in_scope, skipped, dt);
  report(3, "existence sweep n <= 61", ok, detail.empty() ? buf : detail + buf);
  return ok;
}

// enumerate up to `limit` ordered choices of two disjoint Hamilton cycles
// built from diagonal pairs at distance 1 or 2
std::vector<std::pair<CellSet, CellSet>> hamilton_choices(int n, std::size_t limit) {
  std::vector<std::pair<CellSet, CellSet>> out;
  for (int d1 = 1; d1 <= 2 && out.size() < limit; ++d1) {
    if (std::gcd(d1, n) != 1) continue;
    for (int a = 0; a < n && out.size() < limit; ++a) {
      int a2 = (a + d1) % n;
      for (int d2 = 1; d2 <= 2 && out.size() < limit; ++d2) {
        if (std::gcd(d2, n) != 1) continue;
        for (int b = 0; b < n && out.size() < limit; ++b) {
          int b2 = (b + d2) % n;
          std::set<int> used{a, a2, b, b2};
          if (used.size() != 4) continue;
          out.push_back({cell_union(diagonal(n, a), diagonal(n, a2)),
                         cell_union(diagonal(n, b), diagonal(n, b2))});
        }
      }
    }
  }
  return out;
}

std::vector<std::pair<CellSet, CellSet>> twofactor_choices(int n, std::size_t limit) {
  std::vector<std::pair<CellSet, CellSet>> out;
  if (n % 2 != 0) return out;
  for (int a = 0; a < n && out.size() < limit; ++a) {
    if (std::gcd(2, n) != 2) break;
    int a2 = (a + 2) % n;
    for (int b = 0; b < n && out.size() < limit; ++b) {
      int b2 = (b + 2) % n;
      std::set<int> used{a, a2, b, b2};
      if (used.size() != 4) continue;
      // both must split into two n-cycles: distance 2 with even n does
      if (std::gcd(2, n) != 2) continue;
      out.push_back({cell_union(diagonal(n, a), diagonal(n, a2)),
                     cell_union(diagonal(n, b), diagonal(n, b2))});
    }
  }
  return out;
}

bool shiftable_lines_ok(const SparseSquareArray& a) {
  int n = a.order();
  std::vector<int> pos_r(n + 1, 0), neg_r(n + 1, 0), pos_c(n + 1, 0), neg_c(n + 1, 0);
  for (const auto& [p, v] : a.cells()) {
    (v > 0 ? pos_r : neg_r)[p.row]++;
    (v > 0 ? pos_c : neg_c)[p.col]++;
  }
  for (int i = 1; i <= n; ++i) {
    if (a.row_sum(i) != 0 || a.col_sum(i) != 0) return false;
    if (pos_r[i] != 2 || neg_r[i] != 2 || pos_c[i] != 2 || neg_c[i] != 2) return false;
  }
  return true;
}

bool criterion4() {
  auto t0 = Clock::now();
  long violations = 0;
  long bacon_runs = 0, hamilton_runs = 0, twofactor_runs = 0;

  for (int n = 3; n <= 40; ++n) {
    const std::int64_t N = n;
    for (const auto& [s1, s2] : hamilton_choices(n, 5)) {
      ++bacon_runs;
      SparseSquareArray a = fill_bacon(n, s1, s2);
      SupportSet expect;
      for (std::int64_t x = 1; x <= 4 * N; ++x) expect.insert(x);
      if (support(a) != expect) ++violations;
      for (int i = 1; i <= n; ++i)
        if (a.row_sum(i) != 8 * N + 2 || a.col_sum(i) != 8 * N + 2) ++violations;

      ++hamilton_runs;
      RunPair runs{.s = 3 * N + 7, .t = N + 3};  // s = t + 2n + 4
      SparseSquareArray h = fill_hamilton_pair(n, s1, s2, runs);
      SupportSet hexpect;
      for (std::int64_t i = 1; i <= 2 * N; ++i) {
        hexpect.insert(runs.t + i);
        hexpect.insert(runs.s + i);
      }
      if (support(h) != hexpect) ++violations;
      if (!shiftable_lines_ok(h)) ++violations;
      for (int zi = 1; zi <= 20; ++zi) {
        SparseSquareArray shifted = shift(h, 1 + zi * zi);
        for (int i = 1; i <= n; ++i)
          if (shifted.row_sum(i) != 0 || shifted.col_sum(i) != 0) ++violations;
      }
    }
    if (n % 2 == 0 && n >= 4) {
      for (const auto& [s1, s2] : twofactor_choices(n, 5)) {
        ++twofactor_runs;
        RunPair runs{.s = 3 * N + 10, .t = 2 * N + 8, .u = N + 5, .v = 3};
        SparseSquareArray a = fill_twofactor_pair(n, s1, s2, runs);
        SupportSet expect;
        for (std::int64_t i = 1; i <= N; ++i) {
          expect.insert(runs.v + i);
          expect.insert(runs.u + i);
          expect.insert(runs.t + i);
          expect.insert(runs.s + i);
        }
        if (support(a) != expect) ++violations;
        if (!shiftable_lines_ok(a)) ++violations;
        for (int zi = 1; zi <= 20; ++zi) {
          SparseSquareArray shifted = shift(a, 1 + zi * zi);
          for (int i = 1; i <= n; ++i)
            if (shifted.row_sum(i) != 0 || shifted.col_sum(i) != 0) ++violations;
        }
      }
    }
  }

  bool ok = violations == 0 && bacon_runs >= 5 && twofactor_runs >= 5;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%ld violations over %ld+%ld+%ld filler runs, %.2f s", violations, bacon_runs,
                hamilton_runs, twofactor_runs, seconds_since(t0));
  report(4, "filler property suites", ok, buf);
  return ok;
}

bool criterion5() {
  bool ok = true;
  std::string detail;
  SearchBudget budget;
  budget.max_millis = 60000;
  for (int n : {3, 4}) {
    auto t0 = Clock::now();
    SearchResult first = search(n, 3, budget);
    if (first.outcome != SearchOutcome::found ||
        !verify_heffter(*first.array, 3).valid()) {
      ok = false;
      detail += "search(" + std::to_string(n) + ",3) failed; ";
      continue;
    }
    SearchResult second = search(n, 3, budget);
    if (second.outcome != SearchOutcome::found || !(*second.array == *first.array)) {
      ok = false;
      detail += "search(" + std::to_string(n) + ",3) not deterministic; ";
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "search(%d,3): %" PRIu64 " nodes, %.3f s; ", n, first.nodes,
                  seconds_since(t0));
    detail += buf;
  }
  report(5, "oracle cross-check", ok, detail);
  return ok;
}

bool criterion6() {
  Rng rng{0x48656666746572ULL};
  std::vector<SparseSquareArray> pool;
  for (auto [n, k] : std::initializer_list<std::pair<int, int>>{
           {7, 3}, {9, 5}, {15, 6}, {18, 5}, {19, 3}, {13, 9}, {26, 7}, {30, 7}, {34, 3},
           {21, 17}})
    pool.push_back(*generate(n, k).array);

  long rejected = 0;
  const long total = 1000;
  for (long t = 0; t < total; ++t) {
    const SparseSquareArray& src = pool[t % pool.size()];
    int n = src.order();
    std::int64_t nk = static_cast<std::int64_t>(src.cell_count());
    // pick a filled cell
    auto it = src.cells().begin();
    std::advance(it, rng.below(src.cell_count()));
    auto [cell, value] = *it;

    SparseSquareArray mutated(n);
    int kind = static_cast<int>(t % 3);
    if (kind == 0) {
      // change the value (never to itself, never to zero)
      std::int64_t nv;
      do {
        nv = static_cast<std::int64_t>(rng.below(2 * nk)) - nk;
      } while (nv == 0 || nv == value);
      for (const auto& [p, v] : src.cells()) mutated.set(p, p == cell ? nv : v);
    } else if (kind == 1) {
      for (const auto& [p, v] : src.cells()) mutated.set(p, p == cell ? -v : v);
    } else {
      // move the entry to a random empty cell
      Position target;
      do {
        target = {static_cast<int>(rng.below(n)) + 1, static_cast<int>(rng.below(n)) + 1};
      } while (src.filled(target));
      for (const auto& [p, v] : src.cells())
        if (!(p == cell)) mutated.set(p, v);
      mutated.set(target, value);
    }
    int k = static_cast<int>(nk / n);
    if (!verify_heffter(mutated, k).valid()) ++rejected;
  }
  bool ok = rejected == total;
  char buf[96];
  std::snprintf(buf, sizeof buf, "%ld/%ld mutations rejected", rejected, total);
  report(6, "mutation soundness", ok, buf);
  return ok;
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  if (g_failed == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", g_failed);
  return 1;
}
