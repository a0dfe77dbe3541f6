#include "kz/matrix_mod_p.hpp"

#include <stdexcept>

namespace kz {

void RowEliminator::reduce(std::vector<uint32_t>& row) const {
  const uint64_t p = field_.p();
  for (size_t k = 0; k < pivot_rows_.size(); ++k) {
    int col = pivot_cols_[k];
    uint32_t f = row[static_cast<size_t>(col)];
    if (f == 0) continue;
    const auto& piv = pivot_rows_[k];
    uint64_t mul = p - f;  // row += (p - f) * piv
    for (int c = col; c < width_; ++c) {
      uint64_t v = row[static_cast<size_t>(c)] + mul * piv[static_cast<size_t>(c)];
      row[static_cast<size_t>(c)] = static_cast<uint32_t>(v % p);
    }
  }
}

bool RowEliminator::add_row(std::vector<uint32_t> row) {
  if (static_cast<int>(row.size()) != width_) throw std::invalid_argument("RowEliminator: bad width");
  reduce(row);
  int lead = -1;
  for (int c = 0; c < width_; ++c)
    if (row[static_cast<size_t>(c)]) {
      lead = c;
      break;
    }
  if (lead < 0) return false;
  uint32_t inv = field_.inv(row[static_cast<size_t>(lead)]);
  for (int c = lead; c < width_; ++c)
    row[static_cast<size_t>(c)] = field_.mul(row[static_cast<size_t>(c)], inv);
  pivot_rows_.push_back(std::move(row));
  pivot_cols_.push_back(lead);
  return true;
}

int rank_of_rows(const std::vector<std::vector<uint32_t>>& rows, int width, const PrimeField& field) {
  RowEliminator elim(width, field);
  for (const auto& r : rows) elim.add_row(r);
  return elim.rank();
}

std::vector<std::vector<uint32_t>> left_kernel(const std::vector<std::vector<uint32_t>>& rows,
                                               int width, const PrimeField& field) {
  const uint64_t p = field.p();
  size_t m = rows.size();
  // eliminate on [row | e_r]; rows whose left part dies give kernel vectors
  struct Tracked {
    std::vector<uint32_t> left;
    std::vector<uint32_t> comb;
    int lead;
  };
  std::vector<Tracked> pivots;
  std::vector<std::vector<uint32_t>> kernel;
  for (size_t r = 0; r < m; ++r) {
    std::vector<uint32_t> left = rows[r];
    std::vector<uint32_t> comb(m, 0);
    comb[r] = 1;
    for (const auto& piv : pivots) {
      uint32_t f = left[static_cast<size_t>(piv.lead)];
      if (f == 0) continue;
      uint64_t mul = p - f;
      for (int c = 0; c < width; ++c) {
        uint64_t v = left[static_cast<size_t>(c)] + mul * piv.left[static_cast<size_t>(c)];
        left[static_cast<size_t>(c)] = static_cast<uint32_t>(v % p);
      }
      for (size_t c = 0; c < m; ++c) {
        uint64_t v = comb[c] + mul * piv.comb[c];
        comb[c] = static_cast<uint32_t>(v % p);
      }
    }
    int lead = -1;
    for (int c = 0; c < width; ++c)
      if (left[static_cast<size_t>(c)]) {
        lead = c;
        break;
      }
    if (lead < 0) {
      // normalize on the first nonzero combination entry
      uint32_t first = 0;
      for (uint32_t v : comb)
        if (v) {
          first = v;
          break;
        }
      if (first) {
        uint32_t inv = field.inv(first);
        for (auto& v : comb) v = field.mul(v, inv);
      }
      kernel.push_back(std::move(comb));
    } else {
      uint32_t inv = field.inv(left[static_cast<size_t>(lead)]);
      for (auto& v : left) v = field.mul(v, inv);
      for (auto& v : comb) v = field.mul(v, inv);
      pivots.push_back({std::move(left), std::move(comb), lead});
    }
  }
  return kernel;
}

}  // namespace kz
