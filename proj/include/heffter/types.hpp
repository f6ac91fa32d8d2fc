#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace heffter {

// Rows and columns are 1-based throughout. Index arithmetic is modular with
// 0 replaced by n, applied at this single normalization point.
inline int wrap_index(long long i, int n) {
  long long r = i % n;
  if (r <= 0) r += n;
  return static_cast<int>(r);
}

enum class errc {
  invalid_argument,
  out_of_range,
  cell_collision,
  zero_entry,
  not_two_factor,
  not_single_cycle,
  not_hamilton,
  not_disjoint,
  no_shared_row,
  bad_run_spacing,
  not_two_factor_of_two_n_cycles,
  alignment_impossible,
  bad_line_sum,
  wrong_case,
  unknown_fixture,
  missing_parameter,
  parse_error,
  internal,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

struct Position {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Position&, const Position&) = default;
};

// An n x n partial matrix of signed nonzero integers. Empty cells are absent
// from the map; 0 is never a legal entry. Entry magnitudes are bounded by
// nk <= n^2 in every use below, so 64-bit values are exact for any feasible
// order.
class SparseSquareArray {
 public:
  using CellMap = std::map<Position, std::int64_t>;

  explicit SparseSquareArray(int order);

  int order() const { return order_; }
  const CellMap& cells() const { return cells_; }
  std::size_t cell_count() const { return cells_.size(); }

  bool filled(Position p) const { return cells_.count(p) != 0; }
  std::optional<std::int64_t> at(Position p) const;

  // Throws: out_of_range, zero_entry, cell_collision.
  void set(Position p, std::int64_t value);

  std::int64_t row_sum(int row) const;
  std::int64_t col_sum(int col) const;
  int row_fill(int row) const;
  int col_fill(int col) const;

  friend bool operator==(const SparseSquareArray&, const SparseSquareArray&) = default;

 private:
  int order_;
  CellMap cells_;
};

using SupportSet = std::set<std::int64_t>;

// Set of |v| over all entries; duplicates collapse here and are reported
// separately by support_multiplicity.
SupportSet support(const SparseSquareArray& a);
std::map<std::int64_t, int> support_multiplicity(const SparseSquareArray& a);

// A +- z: add z to positive entries, subtract z from negative ones. Keeps the
// filled-cell set; support shifts by z.
SparseSquareArray shift(const SparseSquareArray& a, std::int64_t z);

// Multiplies every entry by -1.
SparseSquareArray negate(const SparseSquareArray& a);

// Union of two arrays of the same order with disjoint filled cells.
SparseSquareArray superimpose(const SparseSquareArray& a, const SparseSquareArray& b);

// Re-places every cell of a block at (row + row_offset, col + col_offset)
// inside an array of order target_order.
SparseSquareArray embed_block(const SparseSquareArray& block, int target_order,
                              int row_offset, int col_offset);

}  // namespace heffter
