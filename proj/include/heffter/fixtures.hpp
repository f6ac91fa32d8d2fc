#pragma once

#include <optional>

#include "heffter/cycles.hpp"
#include "heffter/types.hpp"

namespace heffter {

// Embedded reference arrays, stored exactly as published (including the known
// defects of H(13;9), which are preserved here and repaired elsewhere). Cells
// marked H or K in a source display are kept out of the numeric array and
// exposed as named masks.

struct Fixture {
  std::string name;
  int order = 0;
  int fill_k = 0;  // nominal filled cells per line of the numeric part
  bool parametric = false;
  SparseSquareArray array{1};
  std::map<std::string, CellSet> masks;
};

// Parametric fixtures evaluate entries such as nk-4 or 10k-4 at the given k.
// H(30;3) defaults to k = 3 when k is omitted; the A1 blocks require k.
// Throws unknown_fixture, missing_parameter, invalid_argument (k supplied for
// a fixed fixture).
Fixture get_fixture(const std::string& name, std::optional<int> k = std::nullopt);

// Deterministic sorted listing of all embedded fixtures.
std::vector<std::string> list_fixtures();

}  // namespace heffter
