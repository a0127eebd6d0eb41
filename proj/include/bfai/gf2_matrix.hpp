#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bfai/bits.hpp"
#include "bfai/errors.hpp"

namespace bfai {

/*! \brief Dense GF(2) matrix, rows bit-packed into 64-bit words. */
class gf2_matrix {
 public:
  gf2_matrix(std::uint64_t rows, std::uint64_t cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

  std::uint64_t rows() const { return rows_; }
  std::uint64_t cols() const { return cols_; }
  std::uint64_t words_per_row() const { return wpr_; }

  bool get(std::uint64_t r, std::uint64_t c) const {
    return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1;
  }

  void set(std::uint64_t r, std::uint64_t c, bool v) {
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    if (v)
      data_[r * wpr_ + (c >> 6)] |= bit;
    else
      data_[r * wpr_ + (c >> 6)] &= ~bit;
  }

  std::span<const std::uint64_t> row(std::uint64_t r) const {
    return {data_.data() + r * wpr_, wpr_};
  }

 private:
  std::uint64_t rows_, cols_, wpr_;
  std::vector<std::uint64_t> data_;
};

namespace detail {

/*! \brief Incremental GF(2) row reduction with kernel extraction.
 *
 * Rows are inserted one at a time and reduced against the stored rows; a row
 * that survives owns the lowest set column as its pivot ("lowest-index pivot
 * preference", which also fixes the kernel basis and hence all annihilator
 * witnesses). Rank never exceeds the column count, so callers streaming many
 * rows may stop as soon as full_column_rank() holds.
 */
class row_reducer {
 public:
  explicit row_reducer(std::uint64_t cols)
      : cols_(cols), wpr_((cols + 63) / 64), pivot_row_(cols, -1) {}

  std::uint64_t cols() const { return cols_; }
  std::uint64_t rank() const { return rows_.size(); }
  bool full_column_rank() const { return rank() == cols_; }

  /* returns true when the row was independent (rank grew) */
  bool insert(std::span<const std::uint64_t> row) {
    std::vector<std::uint64_t> r(row.begin(), row.end());
    while (true) {
      const int pivot = lowest_bit(r);
      if (pivot < 0) return false;
      const std::int64_t owner = pivot_row_[pivot];
      if (owner < 0) {
        pivot_of_.push_back(pivot);
        pivot_row_[pivot] = static_cast<std::int64_t>(rows_.size());
        rows_.push_back(std::move(r));
        return true;
      }
      xor_into(r, rows_[static_cast<std::size_t>(owner)]);
    }
  }

  /* Reduced echelon form + canonical kernel basis, one vector per free
   * column in ascending column order. */
  std::vector<std::vector<std::uint64_t>> kernel_basis() {
    back_eliminate();
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::uint64_t c = 0; c < cols_; ++c) {
      if (pivot_row_[c] >= 0) continue;
      std::vector<std::uint64_t> v(wpr_, 0);
      v[c >> 6] |= std::uint64_t{1} << (c & 63);
      for (std::size_t i = 0; i < rows_.size(); ++i)
        if ((rows_[i][c >> 6] >> (c & 63)) & 1) {
          const int p = pivot_of_[i];
          v[p >> 6] |= std::uint64_t{1} << (p & 63);
        }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  std::optional<std::vector<std::uint64_t>> first_kernel_vector() {
    if (full_column_rank()) return std::nullopt;
    back_eliminate();
    for (std::uint64_t c = 0; c < cols_; ++c) {
      if (pivot_row_[c] >= 0) continue;
      std::vector<std::uint64_t> v(wpr_, 0);
      v[c >> 6] |= std::uint64_t{1} << (c & 63);
      for (std::size_t i = 0; i < rows_.size(); ++i)
        if ((rows_[i][c >> 6] >> (c & 63)) & 1) {
          const int p = pivot_of_[i];
          v[p >> 6] |= std::uint64_t{1} << (p & 63);
        }
      return v;
    }
    return std::nullopt;
  }

 private:
  int lowest_bit(const std::vector<std::uint64_t>& r) const {
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i]) return static_cast<int>(i * 64 + std::countr_zero(r[i]));
    return -1;
  }

  static void xor_into(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
  }

  void back_eliminate() {
    if (reduced_) return;
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivot_of_[a] > pivot_of_[b]; });
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
      const std::size_t i = order[oi];
      const int p = pivot_of_[i];
      for (std::size_t j = 0; j < rows_.size(); ++j) {
        if (j == i) continue;
        if ((rows_[j][p >> 6] >> (p & 63)) & 1) xor_into(rows_[j], rows_[i]);
      }
    }
    reduced_ = true;
  }

  std::uint64_t cols_, wpr_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<int> pivot_of_;
  std::vector<std::int64_t> pivot_row_;
  bool reduced_ = false;
};

}  // namespace detail

struct kernel_result {
  std::uint64_t rank = 0;
  std::vector<std::vector<std::uint64_t>> basis;  // packed vectors of cols bits
};

/* Rank and a canonical basis of {v : M v = 0}; rank-nullity by construction. */
inline kernel_result kernel_basis(const gf2_matrix& m) {
  detail::row_reducer red(m.cols());
  for (std::uint64_t r = 0; r < m.rows(); ++r) {
    red.insert(m.row(r));
    if (red.full_column_rank()) break;
  }
  kernel_result out;
  out.rank = red.rank();
  out.basis = red.kernel_basis();
  return out;
}

inline std::uint64_t gf2_rank(const gf2_matrix& m) {
  detail::row_reducer red(m.cols());
  for (std::uint64_t r = 0; r < m.rows(); ++r) {
    red.insert(m.row(r));
    if (red.full_column_rank()) break;
  }
  return red.rank();
}

}  // namespace bfai
