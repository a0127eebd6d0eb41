#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bfai/anf.hpp"
#include "bfai/boolean_function.hpp"
#include "bfai/gf2_matrix.hpp"

namespace bfai {

enum class side { function, complement };

inline const char* side_name(side s) { return s == side::function ? "f" : "1+f"; }

/* Masks u with popcount(u) <= d, ordered by (popcount, numeric value). */
inline std::vector<std::uint32_t> monomial_basis(int n, int d) {
  if (n < 1 || n > max_vars || d < 0 || d > n)
    fail(errc::out_of_range, "monomial degree out of range");
  std::vector<std::uint32_t> masks;
  masks.reserve(binomial_sum(n, d));
  for (int w = 0; w <= d; ++w)
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << n); ++u)
      if (popcount(static_cast<std::uint32_t>(u)) == w)
        masks.push_back(static_cast<std::uint32_t>(u));
  return masks;
}

/* Row per point, column per monomial; entry 1 iff the monomial evaluates to
 * 1 at the point, i.e. u is a submask of x. */
inline gf2_matrix evaluation_matrix(std::span<const std::uint32_t> points,
                                    std::span<const std::uint32_t> monomials) {
  gf2_matrix m(points.size(), monomials.size());
  for (std::size_t r = 0; r < points.size(); ++r)
    for (std::size_t c = 0; c < monomials.size(); ++c)
      if ((points[r] & monomials[c]) == monomials[c]) m.set(r, c, true);
  return m;
}

struct annihilator_witness {
  anf_polynomial g;
  side which;
  int degree;
};

inline bool verify_annihilator(const anf_polynomial& g, const boolean_function& f) {
  if (g.num_vars() != f.num_vars()) fail(errc::dimension_mismatch, "variable counts differ");
  return (table_from_anf(g) & f).is_zero();
}

namespace detail {

inline void fill_monomial_row(std::vector<std::uint64_t>& row, std::uint32_t point,
                              std::span<const std::uint32_t> monomials) {
  std::fill(row.begin(), row.end(), 0);
  for (std::size_t c = 0; c < monomials.size(); ++c)
    if ((point & monomials[c]) == monomials[c]) row[c >> 6] |= std::uint64_t{1} << (c & 63);
}

struct degree_step {
  std::uint64_t rank = 0;
  std::optional<std::vector<std::uint64_t>> kernel_vector;
};

/* Rank of the evaluation system of `points` over degree-<=d monomials, plus
 * the canonical kernel vector when one exists. Streams rows into the reducer
 * and stops as soon as the columns are exhausted. */
inline degree_step annihilator_step(std::span<const std::uint32_t> points,
                                    std::span<const std::uint32_t> monomials) {
  row_reducer red(monomials.size());
  std::vector<std::uint64_t> row((monomials.size() + 63) / 64);
  for (auto p : points) {
    fill_monomial_row(row, p, monomials);
    red.insert(row);
    if (red.full_column_rank()) break;
  }
  degree_step out;
  out.rank = red.rank();
  out.kernel_vector = red.first_kernel_vector();
  return out;
}

inline anf_polynomial anf_from_kernel_vector(int n, std::span<const std::uint32_t> monomials,
                                             std::span<const std::uint64_t> v) {
  anf_polynomial g(n);
  for (std::size_t c = 0; c < monomials.size(); ++c)
    if ((v[c >> 6] >> (c & 63)) & 1) g.set(monomials[c], true);
  return g;
}

}  // namespace detail

/* Smallest d <= d_max admitting a nonzero g with deg g <= d and g*f = 0,
 * together with a verified witness. Absence (e.g. f = 1) is a value. */
inline std::optional<std::pair<int, annihilator_witness>> min_annihilator_degree(
    const boolean_function& f, int d_max) {
  if (d_max < 0 || d_max > f.num_vars()) fail(errc::out_of_range, "degree cap out of range");
  const auto points = f.support();
  for (int d = 0; d <= d_max; ++d) {
    const auto monomials = monomial_basis(f.num_vars(), d);
    auto step = detail::annihilator_step(points, monomials);
    if (step.kernel_vector) {
      anf_polynomial g = detail::anf_from_kernel_vector(f.num_vars(), monomials, *step.kernel_vector);
      const auto deg = g.degree();
      assert(deg && *deg <= d);
      if (!verify_annihilator(g, f)) fail(errc::invalid_argument, "internal: witness failed verification");
      return std::make_pair(d, annihilator_witness{std::move(g), side::function, *deg});
    }
  }
  return std::nullopt;
}

/* dim{g : deg g <= d, g*f = 0} = #monomials - rank of the evaluation system */
inline std::uint64_t annihilator_space_dimension(const boolean_function& f, int d) {
  const auto monomials = monomial_basis(f.num_vars(), d);
  const auto points = f.support();
  detail::row_reducer red(monomials.size());
  std::vector<std::uint64_t> row((monomials.size() + 63) / 64);
  for (auto p : points) {
    detail::fill_monomial_row(row, p, monomials);
    red.insert(row);
    if (red.full_column_rank()) break;
  }
  return monomials.size() - red.rank();
}

struct rank_evidence {
  int degree;
  side which;
  std::uint64_t monomial_count;
  std::uint64_t rank;  // full column rank certifies "no annihilator at this degree"
};

struct ai_result {
  int ai;
  annihilator_witness witness;
  std::vector<rank_evidence> evidence;
};

inline constexpr std::uint64_t default_work_budget = std::uint64_t{1} << 27;

namespace detail {

inline std::optional<ai_result> exact_ai_impl(const boolean_function& f,
                                              std::optional<std::uint64_t> budget) {
  const int n = f.num_vars();
  const int cap = (n + 1) / 2;
  const boolean_function fc = f.complemented();
  const auto points_f = f.support();
  const auto points_c = fc.support();
  std::uint64_t spent = 0;
  std::vector<rank_evidence> evidence;
  for (int d = 0; d <= cap; ++d) {
    const auto monomials = monomial_basis(n, d);
    for (side s : {side::function, side::complement}) {
      const auto& points = (s == side::function) ? points_f : points_c;
      if (budget) {
        spent += static_cast<std::uint64_t>(points.size()) * monomials.size();
        if (spent > *budget) return std::nullopt;
      }
      auto step = annihilator_step(points, monomials);
      if (!step.kernel_vector) {
        evidence.push_back({d, s, monomials.size(), step.rank});
        continue;
      }
      anf_polynomial g = anf_from_kernel_vector(n, monomials, *step.kernel_vector);
      const auto deg = g.degree();
      assert(deg && *deg == d);
      const boolean_function& annihilated = (s == side::function) ? f : fc;
      if (!verify_annihilator(g, annihilated))
        fail(errc::invalid_argument, "internal: witness failed verification");
      const int deg_found = *deg;
      return ai_result{d, annihilator_witness{std::move(g), s, deg_found}, std::move(evidence)};
    }
  }
  fail(errc::invalid_argument, "internal: no annihilator up to ceil(n/2)");
}

}  // namespace detail

/* AI(f): smallest degree of a nonzero annihilator of f or of 1+f. Terminates
 * by d = ceil(n/2); the minimal witness side is searched f first, then 1+f,
 * so results and witnesses are deterministic. */
inline ai_result exact_ai(const boolean_function& f) {
  auto r = detail::exact_ai_impl(f, std::nullopt);
  assert(r);
  return std::move(*r);
}

/* Budgeted variant: work is metered as rows x columns per rank computation;
 * nullopt when the cumulative work would exceed the budget. */
inline std::optional<ai_result> exact_ai_within(const boolean_function& f, std::uint64_t budget) {
  return detail::exact_ai_impl(f, budget);
}

}  // namespace bfai
