#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "bfai/boolean_function.hpp"

namespace bfai {

/* l(x) = parity(x & mask) + constant_term. A form with empty mask is
 * degenerate (a constant, not degree 1) and is rejected wherever a genuine
 * affine form is required. */
struct affine_form {
  std::uint32_t mask = 0;
  bool constant_term = false;

  bool evaluate(std::uint32_t x) const { return parity(x & mask) ^ constant_term; }
  bool degenerate() const { return mask == 0; }
};

inline boolean_function affine_table(const affine_form& l, int n) {
  boolean_function f(n);
  for (std::uint64_t x = 0; x < f.size(); ++x)
    f.set(x, l.evaluate(static_cast<std::uint32_t>(x)));
  return f;
}

/*! \brief Affine subspace of F_2^n held as a row-reduced constraint system.
 *
 * Each constraint reads parity(x & mask) = value. After reduction every row
 * owns a distinct pivot (its lowest set coordinate), pivots are strictly
 * increasing, and no pivot occurs in another row's mask. Points are
 * enumerated by assigning the non-pivot (free) coordinates in ascending
 * order, which fixes the variable order of restrictions.
 */
class affine_subspace {
 public:
  struct constraint {
    std::uint32_t mask;
    bool value;
  };

  /* Subspace cut out by l = 0 for every given form. Rejects degenerate
   * forms and inconsistent systems; dependent duplicates collapse. */
  static affine_subspace make(int n, std::span<const affine_form> forms) {
    if (forms.empty()) fail(errc::invalid_argument, "constraint list is empty");
    std::vector<constraint> cs;
    cs.reserve(forms.size());
    for (const auto& l : forms) {
      if (l.degenerate()) fail(errc::degenerate_form, "constant form used as a constraint");
      cs.push_back({l.mask, l.constant_term});
    }
    return affine_subspace(n, cs);
  }

  static affine_subspace make(int n, std::initializer_list<affine_form> forms) {
    return make(n, std::span<const affine_form>(forms.begin(), forms.end()));
  }

  /* {x : x_i = value for every coordinate i set in coords} */
  static affine_subspace fix_coordinates(int n, std::uint32_t coords, bool value) {
    if (coords == 0) fail(errc::invalid_argument, "no coordinates to fix");
    std::vector<constraint> cs;
    std::uint32_t m = coords;
    while (m) {
      const std::uint32_t bit = m & (0u - m);
      cs.push_back({bit, value});
      m &= m - 1;
    }
    return affine_subspace(n, cs);
  }

  int num_vars() const { return n_; }
  int codim() const { return static_cast<int>(rows_.size()); }
  int dim() const { return n_ - codim(); }
  std::uint64_t point_count() const { return std::uint64_t{1} << dim(); }

  const std::vector<constraint>& constraints() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  const std::vector<int>& free_coords() const { return free_; }

  bool contains(std::uint32_t x) const {
    for (const auto& r : rows_)
      if (parity(x & r.mask) != r.value) return false;
    return true;
  }

  /* Point with the k-th assignment of the free coordinates (ascending).
   * Pivot coordinates are solved from the reduced rows. */
  std::uint32_t lift(std::uint64_t free_bits) const {
    std::uint32_t x = 0;
    for (std::size_t j = 0; j < free_.size(); ++j)
      if ((free_bits >> j) & 1) x |= std::uint32_t{1} << free_[j];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::uint32_t pivot_bit = std::uint32_t{1} << pivots_[r];
      if (parity(x & (rows_[r].mask & ~pivot_bit)) != rows_[r].value) x |= pivot_bit;
    }
    return x;
  }

  std::uint32_t point(std::uint64_t k) const {
    if (k >= point_count()) fail(errc::out_of_range, "point index out of range");
    return lift(k);
  }

 private:
  affine_subspace(int n, std::span<const constraint> input) : n_(n) {
    if (n < 1 || n > max_vars) fail(errc::invalid_argument, "bad variable count");
    const std::uint32_t space_mask = (n == 32) ? ~0u : ((std::uint32_t{1} << n) - 1);
    for (auto c : input) {
      if (c.mask & ~space_mask) fail(errc::invalid_argument, "constraint touches missing variables");
      for (std::size_t r = 0; r < rows_.size(); ++r)
        if ((c.mask >> pivots_[r]) & 1) {
          c.mask ^= rows_[r].mask;
          c.value ^= rows_[r].value;
        }
      if (c.mask == 0) {
        if (c.value) fail(errc::inconsistent_system, "constraints have no common solution");
        continue;  // dependent duplicate
      }
      const int pivot = std::countr_zero(c.mask);
      for (std::size_t r = 0; r < rows_.size(); ++r)
        if ((rows_[r].mask >> pivot) & 1) {
          rows_[r].mask ^= c.mask;
          rows_[r].value ^= c.value;
        }
      rows_.push_back(c);
      pivots_.push_back(pivot);
    }
    sort_rows();
    std::uint32_t pivot_mask = 0;
    for (int p : pivots_) pivot_mask |= std::uint32_t{1} << p;
    for (int i = 0; i < n_; ++i)
      if (!((pivot_mask >> i) & 1)) free_.push_back(i);
  }

  void sort_rows() {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<constraint> rows;
    std::vector<int> pivots;
    for (auto i : order) {
      rows.push_back(rows_[i]);
      pivots.push_back(pivots_[i]);
    }
    rows_ = std::move(rows);
    pivots_ = std::move(pivots);
  }

  int n_;
  std::vector<constraint> rows_;
  std::vector<int> pivots_;
  std::vector<int> free_;
};

/* f viewed as a function of the free coordinates of L (ascending order). */
inline boolean_function restrict_to(const boolean_function& f, const affine_subspace& L) {
  if (f.num_vars() != L.num_vars()) fail(errc::dimension_mismatch, "subspace over a different space");
  if (L.dim() < 1)
    fail(errc::invalid_argument, "subspace is a single point; evaluate f there instead");
  boolean_function g(L.dim());
  for (std::uint64_t k = 0; k < g.size(); ++k) g.set(k, f.get(L.lift(k)));
  return g;
}

/* |{x in L : f(x) = 1}| without materializing the restriction. */
inline std::uint64_t restricted_support_count(const boolean_function& f, const affine_subspace& L) {
  if (f.num_vars() != L.num_vars()) fail(errc::dimension_mismatch, "subspace over a different space");
  std::uint64_t count = 0;
  const std::uint64_t points = L.point_count();
  for (std::uint64_t k = 0; k < points; ++k) count += f.get(L.lift(k));
  return count;
}

}  // namespace bfai
