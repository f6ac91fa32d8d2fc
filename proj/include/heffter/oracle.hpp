#pragma once

#include <optional>

#include "heffter/types.hpp"

namespace heffter {

// Exhaustive backtracking search for H(n;k) at desk scale, independent of the
// construction code paths. Fill patterns are enumerated first (which cells
// hold entries), then signed values are assigned in row-major cell order,
// magnitudes ascending, positive sign first, with modular pruning whenever a
// line completes. The first solution under this order is deterministic.

struct SearchBudget {
  std::uint64_t max_nodes = 1'000'000'000;  // value-placement attempts
  std::int64_t max_millis = -1;             // < 0: no wall-clock limit
};

enum class SearchOutcome { found, exhausted, budget_exceeded };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::exhausted;
  std::optional<SparseSquareArray> array;  // present iff outcome == found
  std::uint64_t nodes = 0;
};

// k < 3 or k > n admits no array and reports exhausted immediately.
SearchResult search(int n, int k, const SearchBudget& budget);

struct CountResult {
  bool budget_exceeded = false;
  std::uint64_t count = 0;  // raw count, no symmetry reduction
  std::uint64_t nodes = 0;
};

// Exact solution count for regression pinning; n <= 4 only (invalid_argument
// beyond that). k outside 3..n counts zero.
CountResult count_solutions(int n, int k, const SearchBudget& budget);

}  // namespace heffter
