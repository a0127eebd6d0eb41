#pragma once

#include <cstdint>
#include <vector>

#include "bfai/bits.hpp"
#include "bfai/errors.hpp"

namespace bfai {

/* Circular coordinate shift: variable i moves to i+1 (mod n). With the
 * x_1-is-LSB index encoding this is a one-bit left rotation of the mask. */
inline std::uint32_t rotate_mask(std::uint32_t mask, int n) {
  const std::uint32_t space = (std::uint32_t{1} << n) - 1;
  return ((mask << 1) | (mask >> (n - 1))) & space;
}

/* Orbit of a point under the circular action: its size is the minimal
 * period, which divides n, and the representative is the numerically
 * smallest rotation. */
struct cyclic_orbit {
  int n = 0;
  std::uint32_t representative = 0;
  int size = 0;
};

inline cyclic_orbit orbit_of(int n, std::uint32_t mask) {
  if (n < 1 || n > max_vars) fail(errc::invalid_argument, "bad variable count");
  if (mask >> n) fail(errc::out_of_range, "point outside F_2^n");
  cyclic_orbit o{n, mask, 1};
  std::uint32_t m = rotate_mask(mask, n);
  while (m != mask) {
    if (m < o.representative) o.representative = m;
    m = rotate_mask(m, n);
    ++o.size;
  }
  return o;
}

inline std::uint32_t orbit_representative(int n, std::uint32_t mask) {
  return orbit_of(n, mask).representative;
}

/* All orbits, ordered by representative; they partition F_2^n. */
inline std::vector<cyclic_orbit> orbit_representatives(int n) {
  if (n < 1 || n > max_vars) fail(errc::invalid_argument, "bad variable count");
  std::vector<cyclic_orbit> orbits;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const auto o = orbit_of(n, static_cast<std::uint32_t>(m));
    if (o.representative == m) orbits.push_back(o);
  }
  return orbits;
}

}  // namespace bfai
