#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "bfai/boolean_function.hpp"

namespace bfai::oracle {

/* Brute-force reference for algebraic immunity on small n. Candidates are
 * every nonzero coefficient set over the degree-<=d monomials, walked in
 * Gray-code order, and the product with f is tested pointwise on the packed
 * tables. No Moebius transform, no elimination: this path is independent of
 * the engine it cross-checks. */

namespace detail {

inline std::vector<std::vector<std::uint64_t>> monomial_tables(int n, int d) {
  const std::uint64_t size = std::uint64_t{1} << n;
  const std::size_t words = static_cast<std::size_t>((size + 63) / 64);
  std::vector<std::vector<std::uint64_t>> tables;
  for (int w = 0; w <= d; ++w)
    for (std::uint64_t u = 0; u < size; ++u) {
      if (std::popcount(u) != w) continue;
      std::vector<std::uint64_t> t(words, 0);
      for (std::uint64_t x = 0; x < size; ++x)
        if ((x & u) == u) t[x >> 6] |= std::uint64_t{1} << (x & 63);
      tables.push_back(std::move(t));
    }
  return tables;
}

inline bool disjoint(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return false;
  return true;
}

/* Does some nonzero g with monomials among `tables` annihilate the given
 * table? Gray-code walk flips one monomial per candidate. */
inline bool annihilator_exists(const std::vector<std::vector<std::uint64_t>>& tables,
                               const std::vector<std::uint64_t>& target) {
  const std::size_t m = tables.size();
  if (m > 26) fail(errc::cost_limit, "oracle: too many monomials to enumerate");
  std::vector<std::uint64_t> g(target.size(), 0);
  std::uint64_t code = 0;
  for (std::uint64_t c = 1; c < (std::uint64_t{1} << m); ++c) {
    const std::uint64_t gray = c ^ (c >> 1);
    const std::uint64_t flipped = gray ^ code;
    code = gray;
    const int j = std::countr_zero(flipped);
    const auto& t = tables[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < g.size(); ++i) g[i] ^= t[i];
    if (disjoint(g, target)) return true;
  }
  return false;
}

}  // namespace detail

inline std::optional<int> min_annihilator_degree(const boolean_function& f, int d_max) {
  for (int d = 0; d <= d_max; ++d) {
    const auto tables = detail::monomial_tables(f.num_vars(), d);
    if (detail::annihilator_exists(tables, f.words())) return d;
  }
  return std::nullopt;
}

inline int exact_ai(const boolean_function& f) {
  const boolean_function fc = f.complemented();
  const int cap = (f.num_vars() + 1) / 2;
  for (int d = 0; d <= cap; ++d) {
    const auto tables = detail::monomial_tables(f.num_vars(), d);
    if (detail::annihilator_exists(tables, f.words())) return d;
    if (detail::annihilator_exists(tables, fc.words())) return d;
  }
  fail(errc::invalid_argument, "oracle: no annihilator up to ceil(n/2)");
}

}  // namespace bfai::oracle
