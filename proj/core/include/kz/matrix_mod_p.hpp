#pragma once

#include <cstdint>
#include <vector>

#include "kz/prime_field.hpp"

namespace kz {

/// Incremental Gaussian elimination over GF(p). Rows are dense vectors of a
/// fixed width. Pivot rows are kept normalized (leading entry 1), so reduced
/// forms and coset representatives are deterministic.
class RowEliminator {
public:
  RowEliminator(int width, PrimeField field) : width_(width), field_(field) {}

  int width() const { return width_; }
  int rank() const { return static_cast<int>(pivot_rows_.size()); }
  const PrimeField& field() const { return field_; }

  /// reduces `row` in place against the current pivots
  void reduce(std::vector<uint32_t>& row) const;

  /// reduce and, if nonzero, absorb as a new pivot; returns true when the
  /// rank grew
  bool add_row(std::vector<uint32_t> row);

  /// true when the vector lies in the span of the absorbed rows
  bool in_span(std::vector<uint32_t> row) const {
    reduce(row);
    for (uint32_t v : row)
      if (v) return false;
    return true;
  }

private:
  int width_;
  PrimeField field_;
  std::vector<std::vector<uint32_t>> pivot_rows_;
  std::vector<int> pivot_cols_;  // parallel to pivot_rows_, strictly tracked
};

/// rank of a row list
int rank_of_rows(const std::vector<std::vector<uint32_t>>& rows, int width, const PrimeField& field);

/// Left kernel: all coefficient vectors c with sum_r c_r * rows[r] = 0.
/// Returned vectors have length rows.size(), are normalized, and come out in
/// a deterministic order.
std::vector<std::vector<uint32_t>> left_kernel(const std::vector<std::vector<uint32_t>>& rows,
                                               int width, const PrimeField& field);

}  // namespace kz
