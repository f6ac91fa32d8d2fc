#include "heffter/types.hpp"

namespace heffter {

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::out_of_range: return "OutOfRange";
    case errc::cell_collision: return "CellCollision";
    case errc::zero_entry: return "ZeroEntry";
    case errc::not_two_factor: return "NotTwoFactor";
    case errc::not_single_cycle: return "NotSingleCycle";
    case errc::not_hamilton: return "NotHamilton";
    case errc::not_disjoint: return "NotDisjoint";
    case errc::no_shared_row: return "NoSharedRow";
    case errc::bad_run_spacing: return "BadRunSpacing";
    case errc::not_two_factor_of_two_n_cycles: return "NotTwoFactorOfTwoNCycles";
    case errc::alignment_impossible: return "AlignmentImpossible";
    case errc::bad_line_sum: return "BadLineSum";
    case errc::wrong_case: return "WrongCase";
    case errc::unknown_fixture: return "UnknownFixture";
    case errc::missing_parameter: return "MissingParameter";
    case errc::parse_error: return "ParseError";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

SparseSquareArray::SparseSquareArray(int order) : order_(order) {
  if (order < 1) throw error(errc::invalid_argument, "array order must be positive");
}

std::optional<std::int64_t> SparseSquareArray::at(Position p) const {
  auto it = cells_.find(p);
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

void SparseSquareArray::set(Position p, std::int64_t value) {
  if (p.row < 1 || p.row > order_ || p.col < 1 || p.col > order_)
    throw error(errc::out_of_range, "cell (" + std::to_string(p.row) + "," +
                                        std::to_string(p.col) + ") outside order " +
                                        std::to_string(order_));
  if (value == 0)
    throw error(errc::zero_entry, "cell (" + std::to_string(p.row) + "," +
                                      std::to_string(p.col) + ") assigned 0");
  auto [it, inserted] = cells_.emplace(p, value);
  if (!inserted)
    throw error(errc::cell_collision, "cell (" + std::to_string(p.row) + "," +
                                          std::to_string(p.col) + ") filled twice");
}

std::int64_t SparseSquareArray::row_sum(int row) const {
  std::int64_t s = 0;
  auto it = cells_.lower_bound({row, 0});
  for (; it != cells_.end() && it->first.row == row; ++it) s += it->second;
  return s;
}

std::int64_t SparseSquareArray::col_sum(int col) const {
  std::int64_t s = 0;
  for (const auto& [p, v] : cells_)
    if (p.col == col) s += v;
  return s;
}

int SparseSquareArray::row_fill(int row) const {
  int c = 0;
  auto it = cells_.lower_bound({row, 0});
  for (; it != cells_.end() && it->first.row == row; ++it) ++c;
  return c;
}

int SparseSquareArray::col_fill(int col) const {
  int c = 0;
  for (const auto& [p, v] : cells_)
    if (p.col == col) ++c;
  return c;
}

SupportSet support(const SparseSquareArray& a) {
  SupportSet s;
  for (const auto& [p, v] : a.cells()) s.insert(v < 0 ? -v : v);
  return s;
}

std::map<std::int64_t, int> support_multiplicity(const SparseSquareArray& a) {
  std::map<std::int64_t, int> m;
  for (const auto& [p, v] : a.cells()) ++m[v < 0 ? -v : v];
  return m;
}

SparseSquareArray shift(const SparseSquareArray& a, std::int64_t z) {
  SparseSquareArray out(a.order());
  for (const auto& [p, v] : a.cells()) out.set(p, v > 0 ? v + z : v - z);
  return out;
}

SparseSquareArray negate(const SparseSquareArray& a) {
  SparseSquareArray out(a.order());
  for (const auto& [p, v] : a.cells()) out.set(p, -v);
  return out;
}

SparseSquareArray superimpose(const SparseSquareArray& a, const SparseSquareArray& b) {
  if (a.order() != b.order())
    throw error(errc::invalid_argument, "superimpose requires equal orders");
  SparseSquareArray out(a.order());
  for (const auto& [p, v] : a.cells()) out.set(p, v);
  for (const auto& [p, v] : b.cells()) out.set(p, v);  // collision throws here
  return out;
}

SparseSquareArray embed_block(const SparseSquareArray& block, int target_order,
                              int row_offset, int col_offset) {
  SparseSquareArray out(target_order);
  for (const auto& [p, v] : block.cells())
    out.set({p.row + row_offset, p.col + col_offset}, v);  // out_of_range throws here
  return out;
}

}  // namespace heffter
