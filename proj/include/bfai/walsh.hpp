#pragma once

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "bfai/affine.hpp"
#include "bfai/boolean_function.hpp"

namespace bfai {

/* W_f(a) = sum_x (-1)^(f(x) + parity(a & x)) */
struct walsh_spectrum {
  int n = 0;
  std::vector<std::int32_t> values;

  std::uint64_t max_abs() const {
    std::uint64_t m = 0;
    for (auto v : values) {
      const std::uint64_t a = static_cast<std::uint64_t>(v < 0 ? -std::int64_t{v} : v);
      if (a > m) m = a;
    }
    return m;
  }
};

namespace detail {

template <typename Int>
void fwht_inplace(std::vector<Int>& a) {
  for (std::size_t len = 1; len < a.size(); len <<= 1)
    for (std::size_t i = 0; i < a.size(); i += len << 1)
      for (std::size_t j = i; j < i + len; ++j) {
        const Int u = a[j], v = a[j + len];
        a[j] = u + v;
        a[j + len] = u - v;
      }
}

}  // namespace detail

inline walsh_spectrum walsh_transform(const boolean_function& f) {
  walsh_spectrum s;
  s.n = f.num_vars();
  s.values.resize(f.size());
  for (std::uint64_t x = 0; x < f.size(); ++x) s.values[x] = f.get(x) ? -1 : 1;
  detail::fwht_inplace(s.values);
  return s;
}

inline std::uint64_t nonlinearity(const walsh_spectrum& s) {
  return (std::uint64_t{1} << (s.n - 1)) - s.max_abs() / 2;
}

inline std::uint64_t nonlinearity(const boolean_function& f) {
  return nonlinearity(walsh_transform(f));
}

/* Hamming distance d(f, l), computed on the tables. The Walsh identity
 * d(f, l) = 2^(n-1) - (-1)^c W_f(mask)/2 is kept as a test property. */
inline std::uint64_t distance_to_affine(const boolean_function& f, const affine_form& l) {
  return (f ^ affine_table(l, f.num_vars())).weight();
}

/* r_f(a) = sum_x (-1)^(f(x) + f(x+a)), recovered from the squared Walsh
 * spectrum so large n stays O(n 2^n). */
struct autocorrelation_spectrum {
  int n = 0;
  std::vector<std::int64_t> values;
};

inline autocorrelation_spectrum autocorrelation(const boolean_function& f) {
  const walsh_spectrum w = walsh_transform(f);
  autocorrelation_spectrum r;
  r.n = w.n;
  r.values.assign(w.values.begin(), w.values.end());
  for (auto& v : r.values) v = v * v;
  detail::fwht_inplace(r.values);
  const std::int64_t scale = std::int64_t{1} << r.n;
  for (auto& v : r.values) v /= scale;
  return r;
}

struct autocorrelation_profile {
  std::uint64_t delta = 0;  // max |r_f(a)| over a != 0
  int pc_order = 0;         // largest k with r_f(a) = 0 for all 1 <= wt(a) <= k
};

inline autocorrelation_profile autocorrelation_profile_of(const boolean_function& f) {
  const autocorrelation_spectrum r = autocorrelation(f);
  autocorrelation_profile p;
  int min_nonzero_weight = f.num_vars() + 1;
  for (std::uint64_t a = 1; a < r.values.size(); ++a) {
    const std::uint64_t abs = static_cast<std::uint64_t>(std::llabs(r.values[a]));
    if (abs > p.delta) p.delta = abs;
    if (abs != 0) {
      const int w = popcount(static_cast<std::uint32_t>(a));
      if (w < min_nonzero_weight) min_nonzero_weight = w;
    }
  }
  p.pc_order = min_nonzero_weight - 1;
  return p;
}

}  // namespace bfai
