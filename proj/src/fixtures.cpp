#include "heffter/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace heffter {

namespace {

// Grid cells: "." empty, "H"/"K" mask marks, plain integers, or linear forms
// in k ("nk-4", "10k", "-14k+2"). The coefficient token "n" stands for the
// fixture order.
struct GridFixture {
  const char* name;
  int fill_k;
  // 0 = fixed, 1 = parametric with required k, 2 = parametric defaulting to fill_k
  int param_mode;
  const char* grid;
};

constexpr const char* kH7_3 = R"(
15 -13 -2 . . . .
-11 14 . -3 . . .
-4 . -8 12 . . .
. -1 10 -9 . . .
. . . . 5 21 17
. . . . 18 6 19
. . . . 20 16 7
)";

constexpr const char* kB10 = R"(
1 22 -23 . . . .
17 2 . -19 . . .
-18 . . 15 3 . .
. -24 14 . . 10 .
. . 9 . . 11 -20
. . . 4 -16 . 12
. . . . 13 -21 8
)";

constexpr const char* kB11 = R"(
-1 18 -17 . . . . .
24 -2 . -22 . . . .
-23 . -3 26 . . . .
. -16 20 -4 . . . .
. . . . 19 -8 -11 .
. . . . -9 21 . -12
. . . . -10 . 25 -15
. . . . . -13 -14 27
)";

constexpr const char* kB14 = R"(
-34 -1 35 . . . . . . . .
-2 24 . -22 . . . . . . .
36 . -32 -4 . . . . . . .
. -23 -3 26 . . . . . . .
. . . . -20 28 -8 . . . .
. . . . 30 -9 -21 . . . .
. . . . -10 -19 29 . . . .
. . . . . . . -11 27 -16 .
. . . . . . . 25 -12 . -13
. . . . . . . -14 . -17 31
. . . . . . . . -15 33 -18
)";

constexpr const char* kB15 = R"(
1 -36 35 . . . . . . . . .
-34 -3 . 37 . . . . . . . .
33 . . -22 -11 . . . . . . .
. 39 -21 . . -18 . . . . . .
. . -14 . . -12 26 . . . . .
. . . -15 -17 . . 32 . . . .
. . . . 28 . . -19 -9 . . .
. . . . . 30 -10 . . -20 . .
. . . . . . -16 . . 24 -8 .
. . . . . . . -13 38 . . -25
. . . . . . . . -29 . 31 -2
. . . . . . . . . -4 -23 27
)";

constexpr const char* kB18 = R"(
1 21 -22 . . . . . . . . . . . .
-36 -4 . 40 . . . . . . . . . . .
35 . . -12 -23 . . . . . . . . . .
. -17 33 . . -16 . . . . . . . . .
. . -11 . . 42 -31 . . . . . . . .
. . . -28 41 . . -13 . . . . . . .
. . . . -18 . . 43 -25 . . . . . .
. . . . . -26 45 . . -19 . . . . .
. . . . . . -14 . . 34 -20 . . . .
. . . . . . . -30 -2 . . 32 . . .
. . . . . . . . 27 . -24 -3 . . .
. . . . . . . . . -15 44 -29 . . .
. . . . . . . . . . . . -8 46 -38
. . . . . . . . . . . . -39 -9 48
. . . . . . . . . . . . 47 -37 -10
)";

constexpr const char* kB22 = R"(
1 -36 35 . . . . . . . . . . . . . . . .
-30 -4 . 34 . . . . . . . . . . . . . . .
29 . . -3 -26 . . . . . . . . . . . . . .
. 40 -2 . . -38 . . . . . . . . . . . . .
. . -33 . . 54 -21 . . . . . . . . . . . .
. . . -31 48 . . -17 . . . . . . . . . . .
. . . . -22 . . 42 -20 . . . . . . . . . .
. . . . . -16 53 . . -37 . . . . . . . . .
. . . . . . -32 . . -15 47 . . . . . . . .
. . . . . . . -25 39 . . -14 . . . . . . .
. . . . . . . . -19 . . -27 46 . . . . . .
. . . . . . . . . 52 -24 . -28 . . . . . .
. . . . . . . . . . -23 41 -18 . . . . . .
. . . . . . . . . . . . . -11 55 -44 . . .
. . . . . . . . . . . . . -45 -12 57 . . .
. . . . . . . . . . . . . 56 -43 -13 . . .
. . . . . . . . . . . . . . . . -8 58 -50
. . . . . . . . . . . . . . . . -51 -9 60
. . . . . . . . . . . . . . . . 59 -49 -10
)";

constexpr const char* kB26 = R"(
-64 1 63 . . . . . . . . . . . . . . . . . . . .
. 65 -16 -49 . . . . . . . . . . . . . . . . . . .
-3 . . 53 -50 . . . . . . . . . . . . . . . . . .
. -66 . -4 . 70 . . . . . . . . . . . . . . . . .
. . -47 . . -22 69 . . . . . . . . . . . . . . . .
. . . . 68 -48 . -20 . . . . . . . . . . . . . . .
. . . . -18 . . 59 -41 . . . . . . . . . . . . . .
. . . . . . -52 . -10 62 . . . . . . . . . . . . .
. . . . . . -17 . 51 -34 . . . . . . . . . . . . .
67 . . . . . . -39 . -28 . . . . . . . . . . . . .
. . . . . . . . . . -29 61 -32 . . . . . . . . . .
. . . . . . . . . . -42 -30 72 . . . . . . . . . .
. . . . . . . . . . 71 -31 -40 . . . . . . . . . .
. . . . . . . . . . . . . -2 60 -58 . . . . . . .
. . . . . . . . . . . . . 23 . 15 -38 . . . . . .
. . . . . . . . . . . . . -21 -33 . . 54 . . . . .
. . . . . . . . . . . . . . -27 . . -8 35 . . . .
. . . . . . . . . . . . . . . 43 14 . . -57 . . .
. . . . . . . . . . . . . . . . 24 . . 13 -37 . .
. . . . . . . . . . . . . . . . . -46 -9 . . 55 .
. . . . . . . . . . . . . . . . . . -26 . . -19 45
. . . . . . . . . . . . . . . . . . . 44 12 . -56
. . . . . . . . . . . . . . . . . . . . 25 -36 11
)";

constexpr const char* kH6_3 = R"(
-1 -16 . . . 17
-11 . -4 . . 15
12 . -9 -3 . .
. -2 . 10 -8 .
. . 13 -7 -6 .
. 18 . . 14 5
)";

constexpr const char* kH9_5 = R"(
45 36 20 . . . . -18 8
-16 24 43 34 . . . . 6
. 44 35 22 7 . -17 . .
. . 5 42 -15 33 . 26 .
9 . . -10 32 41 19 . .
. 1 . . 40 -2 21 31 .
. . -12 . . 23 30 39 11
25 . . 3 . -4 38 . 29
28 -14 . . 27 . . 13 37
)";

constexpr const char* kH6_5 = R"(
1 2 3 . -25 19
5 6 16 4 . 30
23 7 9 8 14 .
11 . 15 12 10 13
. 24 18 17 29 -27
21 22 . 20 -28 26
)";

constexpr const char* kH13_9 = R"(
65 -21 H 9 . 38 . K K . . H 40
52 64 -22 H 10 . 27 . K K . . H
H 51 63 -23 H 10 . 27 . K K 29 .
. . 50 62 -24 H H . 31 . K 12 K
. H H 49 61 -25 . 13 . 33 . K K
K K . H 48 60 H -26 14 . 35 . .
-16 K K . . 47 46 H H 17 . 37 .
. . K K . H 59 45 -15 H 3 . 39
28 H . K K . 19 58 44 -18 H . .
. 30 . . K K . H 57 43 -4 H 5
2 . 32 . . K K . H 56 42 -1 H
. 7 . 34 H . K 41 . H 55 K -6
H . 8 . 36 . -20 K . . H 54 53
)";

constexpr const char* kH15_6 = R"(
6 . . . . . . . . -4 89 81 1 8 .
. 12 . . . . . . . . -88 83 87 85 2
86 . 18 . . . . . . . . -82 77 3 79
73 80 . 24 . . . . . . . . -76 71 9
15 67 74 . 30 . . . . . . . . -70 65
59 21 61 68 . 36 . . . . . . . . -64
-58 53 27 55 62 . 42 . . . . . . . .
. -52 47 33 49 56 . 48 . . . . . . .
. . -46 41 39 43 50 . 54 . . . . . .
. . . -40 35 45 37 44 . 60 . . . . .
. . . . -34 29 51 31 38 . 66 . . . .
. . . . . -28 23 57 25 32 . 72 . . .
. . . . . . -22 17 63 19 26 . 78 . .
. . . . . . . -16 11 69 13 20 . 84 .
. . . . . . . . -10 5 75 7 14 . 90
)";

constexpr const char* kH19_3 = R"(
16 -48 32 . . . . . . . . . . . . . . . .
17 27 . -44 . . . . . . . . . . . . . . .
-33 . -14 . 47 . . . . . . . . . . . . . .
. 21 . 15 . -36 . . . . . . . . . . . . .
. . -18 . -13 . 31 . . . . . . . . . . . .
. . . 29 . -9 . -20 . . . . . . . . . . .
. . . . -34 . -12 . 46 . . . . . . . . . .
. . . . . 45 . -10 -35 . . . . . . . . . .
. . . . . . -19 30 -11 . . . . . . . . . .
. . . . . . . . . -25 24 1 . . . . . . .
. . . . . . . . . 22 -50 . 28 . . . . . .
. . . . . . . . . 3 . 37 . -40 . . . . .
. . . . . . . . . . 26 . 23 . -49 . . . .
. . . . . . . . . . . -38 . 42 . -4 . . .
. . . . . . . . . . . . -51 . 8 43 . . .
. . . . . . . . . . . . . -2 41 -39 . . .
. . . . . . . . . . . . . . . . 5 57 53
. . . . . . . . . . . . . . . . 54 6 55
. . . . . . . . . . . . . . . . 56 52 7
)";

constexpr const char* kH17_5 = R"(
85 -27 . 11 . . . 50 . H H . . . . . 52
68 84 -28 . 12 . . . 35 . H H . . . . .
. 67 83 -29 . 13 . . . . . H H . . 37 .
. . 66 82 -30 . 14 . . . 39 . H H . . .
. . . 65 81 -31 . 15 . . . 41 . H H . .
. . . . 64 80 -32 . . . . . 43 . H 16 H
. . . . . 63 79 -33 . 17 . . . 45 . H H
H H . . . . 62 78 . -34 18 . . . 47 . .
-20 H H . . . . 61 60 . . 21 . . . 49 .
. . H H . . . . 77 59 -19 . 3 . . . 51
36 . . H H . . . . 76 58 -22 . 23 . . .
. 38 . . H H . . . . 75 57 -4 . 5 . .
. . 40 . . H H . 25 . . 74 56 -24 . . .
. . . 42 . . H H . . . . 73 55 -6 . 7
2 . . . 44 . . H H . . . . 72 54 -1 .
. 9 . . . 46 . . H 53 . . . . 71 H -8
H . 10 . . . 48 . -26 H . . . . . 70 69
)";

constexpr const char* kH18_5 = R"(
2 . . . . 51 20 -38 -35 . . . . . . . . .
-40 4 . . . . 53 19 -36 . . . . . . . . .
-42 -28 6 . . . . 37 27 . . . . . . . . .
39 -44 -29 8 . . . . 26 . . . . . . . . .
41 25 -46 -30 10 . . . . . . . . . . . . .
. 43 24 -48 -31 12 . . . . . . . . . . . .
. . 45 23 -50 -32 14 . . . . . . . . . . .
. . . 47 22 -52 -33 16 . . . . . . . . . .
. . . . 49 21 -54 -34 18 . . . . . . . . .
. . . . . . . . . 1 81 K H 69 -60 K 90 H
. . . . . . . . . H 3 80 K H 70 -61 K 89
. . . . . . . . . 88 H 5 79 K H 71 -62 K
. . . . . . . . . 72 87 H 7 78 K H K -63
. . . . . . . . . -55 K 86 H 9 77 K H 64
. . . . . . . . . K -56 K 85 H 11 76 65 H
. . . . . . . . . 75 66 -57 K 84 H 13 H K
. . . . . . . . . K H 67 -58 K 83 H 15 74
. . . . . . . . . H K H 68 -59 K 82 73 17
)";

constexpr const char* kH30_3 = R"(
1 -62 61 K . . . . . . . . . . . . . . . . . . . . . . . K H H
-77 K H -3 80 . . . . . . . . . . . . . . . . . . . . . . . K H
. 83 -12 H H -71 . . . . . . . . K . . . . . . . . . . . . . . K
K -21 K -60 H H 81 . . . . . . . . . . . . . . . . . . . . . . .
. H -49 K K 75 H -26 . . . . . . . . . . . . . . . . . . . . . .
. . H 63 K -4 K H -59 . . . . . . . . . . . . . . . . . . . . .
. . . H -22 K -57 K 79 H . . . . . . . . . . . . . . . . . . . .
. . . . -58 H K K -20 78 H . . . . . . . . . . . . . . . . . . .
. . . . . K -24 74 K H -50 H . . . . . . . . . . . . . . . . . .
. . . . . . H -48 H K -34 82 K . . . . . . . . . . . . . . . . .
. . . . . . . H K -38 H -35 73 K . . . . . . . . . . . . . . . .
76 . . . . . . . H -40 K K -36 H . . . . . . . . . . . . . . . .
. . . . . . . . . K 84 -47 -37 H H K . . . . . . . . . . . . . .
. . . . . . . . . . K H H 2 70 -72 K . . . . . . . . . . . . .
. . . . . . . . . . . K H -27 -19 H 46 K . . . . . . . . . . . .
. . . . . . . . . . . . K 25 H 39 H -64 K . . . . . . . . . . .
. . . . . . . . . . . . . K -51 H -18 H 69 K . . . . . . . . . .
. . . . . . . . . . . . . . K 33 H 8 H -41 K . . . . . . . . .
. . . . . . . . . . . . . . . K -28 H -17 H 45 K . . . . . . . .
. . . . . . . . . . . . . . . . K 56 H 9 H -65 K . . . . . . .
. . . . . . . . . . . . . . . . . K -52 H -16 H 68 K . . . . . .
. . . . . . . . . . . . . . . . . . K 32 H 10 H -42 K . . . . .
. . . . . . . . . . . . . . . . . . . K -29 H -15 H 44 K . . . .
. . . . . . . . . . . . . . . . . . . . K 55 H 11 H -66 K . . .
. . . . . . . . . . . . . . . . . . . . . K -53 H -14 H 67 K . .
. . . . . . . . . . . . . . . . . . . . . . K 31 H 23 -54 H K .
. . . . . . . . . . . . . . . . . . . . . . . K -30 43 -13 H H K
K . . . . . . . . . . . . . . . . . . . . . . . K H H 5 nk nk-4
H K . . . . . . . . . . . . . . . . . . . . . . . K H nk-3 6 nk-2
H H K . . . . . . . . . . . . . . . . . . . . . . . K nk-1 nk-5 7
)";

constexpr const char* kA1m2 = R"(
1 10k-4 -31 10k-2 37
39 3 10k -34 10k-7
-33 40 5 10k-8 10k-3
10k-1 10k-6 36 7 -35
10k-5 -32 10k-9 38 9
)";

constexpr const char* kA1m3 = R"(
1 14k . . -43 14k-7 50
14k-1 3 51 14k-8 . -44 .
. -45 5 14k-2 55 . 14k-12
. . 14k-3 7 14k-11 54 -46
56 . -47 . 9 14k-13 14k-4
14k-6 53 . -48 14k-9 11 .
-49 14k-10 14k-5 52 . . 13
)";

const GridFixture kTable[] = {
    {"A1_m2", 5, 1, kA1m2},
    {"A1_m3", 5, 1, kA1m3},
    {"B(10)", 3, 0, kB10},
    {"B(11)", 3, 0, kB11},
    {"B(14)", 3, 0, kB14},
    {"B(15)", 3, 0, kB15},
    {"B(18)", 3, 0, kB18},
    {"B(22)", 3, 0, kB22},
    {"B(26)", 3, 0, kB26},
    {"H(13;9)", 9, 0, kH13_9},
    {"H(15;6)", 6, 0, kH15_6},
    {"H(17;5)", 5, 0, kH17_5},
    {"H(18;5)", 5, 0, kH18_5},
    {"H(19;3)", 3, 0, kH19_3},
    {"H(30;3)", 3, 2, kH30_3},
    {"H(6;3)", 3, 0, kH6_3},
    {"H(6;5)", 5, 0, kH6_5},
    {"H(7;3)", 3, 0, kH7_3},
    {"H(9;5)", 5, 0, kH9_5},
};

std::vector<std::vector<std::string>> tokenize_grid(const char* grid) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(grid);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) rows.push_back(std::move(toks));
  }
  return rows;
}

// Accepts NNk-C / nk-C forms; anything else must be a plain integer.
std::int64_t eval_token(const std::string& tok, int n, std::optional<int> k, bool* needs_k) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < tok.size() && (tok[pos] == '-' || tok[pos] == '+')) {
    neg = tok[pos] == '-';
    ++pos;
  }
  std::size_t kpos = tok.find('k', pos);
  if (kpos == std::string::npos) {
    return std::stoll(tok);
  }
  std::string coef = tok.substr(pos, kpos - pos);
  std::int64_t c = coef == "n" ? n : std::stoll(coef);
  std::int64_t off = 0;
  if (kpos + 1 < tok.size()) off = std::stoll(tok.substr(kpos + 1));
  *needs_k = true;
  if (!k) return 0;
  std::int64_t val = c * *k + off;
  return neg ? -val : val;
}

Fixture instantiate(const GridFixture& gf, std::optional<int> k) {
  auto rows = tokenize_grid(gf.grid);
  int n = static_cast<int>(rows.size());
  Fixture fx;
  fx.name = gf.name;
  fx.order = n;
  fx.fill_k = k ? *k : gf.fill_k;
  fx.parametric = gf.param_mode != 0;
  fx.array = SparseSquareArray(n);
  for (int r = 1; r <= n; ++r) {
    if (static_cast<int>(rows[r - 1].size()) != n)
      throw error(errc::internal, std::string(gf.name) + ": row " + std::to_string(r) +
                                      " has " + std::to_string(rows[r - 1].size()) + " tokens");
    for (int c = 1; c <= n; ++c) {
      const std::string& tok = rows[r - 1][c - 1];
      if (tok == ".") continue;
      if (tok == "H" || tok == "K") {
        auto& mask = fx.masks[tok];
        mask.order = n;
        mask.cells.insert({r, c});
        continue;
      }
      bool needs_k = false;
      std::int64_t v = eval_token(tok, n, k, &needs_k);
      fx.array.set({r, c}, v);
    }
  }
  return fx;
}

}  // namespace

Fixture get_fixture(const std::string& name, std::optional<int> k) {
  for (const auto& gf : kTable) {
    if (name != gf.name) continue;
    switch (gf.param_mode) {
      case 0:
        if (k) throw error(errc::invalid_argument, name + " is not parametric; drop k");
        return instantiate(gf, std::nullopt);
      case 1:
        if (!k) throw error(errc::missing_parameter, name + " requires k");
        return instantiate(gf, k);
      default:
        return instantiate(gf, k ? *k : gf.fill_k);
    }
  }
  throw error(errc::unknown_fixture, "no fixture named \"" + name + "\"");
}

std::vector<std::string> list_fixtures() {
  std::vector<std::string> names;
  for (const auto& gf : kTable) names.push_back(gf.name);
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace heffter
