#pragma once

#include <bit>
#include <cstdint>

namespace bfai {

inline constexpr int max_vars = 24;

inline int popcount(std::uint32_t v) { return std::popcount(v); }
inline int popcount(std::uint64_t v) { return std::popcount(v); }
inline bool parity(std::uint32_t v) { return std::popcount(v) & 1; }

/* floor(log2(v)), v >= 1 */
inline int floor_log2(std::uint64_t v) { return 63 - std::countl_zero(v); }

/* smallest k with 2^k >= v, v >= 1 */
inline int ceil_log2(std::uint64_t v) { return v <= 1 ? 0 : floor_log2(v - 1) + 1; }

/* exact binomial coefficient; 0 when k is outside [0, m] */
inline std::uint64_t binomial(int m, int k) {
  if (m < 0 || k < 0 || k > m) return 0;
  if (k > m - k) k = m - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(m - k + i) / i;
  return r;
}

/* sum_{i=0}^{d} C(m, i); the empty sum (d < 0) is 0 */
inline std::uint64_t binomial_sum(int m, int d) {
  std::uint64_t s = 0;
  for (int i = 0; i <= d; ++i) s += binomial(m, i);
  return s;
}

}  // namespace bfai
