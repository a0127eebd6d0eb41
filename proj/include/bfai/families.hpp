#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bfai/boolean_function.hpp"
#include "bfai/orbits.hpp"

namespace bfai {

/* v_i = f(x) for all x of weight i; the (n+1)-entry carrier for symmetric
 * functions. */
struct simplified_value_vector {
  int n = 0;
  std::vector<std::uint8_t> bits;  // size n + 1, entries 0/1

  bool at(int weight) const { return bits[static_cast<std::size_t>(weight)] != 0; }
};

inline simplified_value_vector make_value_vector(int n, std::vector<std::uint8_t> bits) {
  if (static_cast<int>(bits.size()) != n + 1)
    fail(errc::invalid_argument, "value vector must have n+1 entries");
  for (auto& b : bits) b = b ? 1 : 0;
  return {n, std::move(bits)};
}

inline boolean_function symmetric_expand(const simplified_value_vector& v) {
  boolean_function f(v.n);
  for (std::uint64_t x = 0; x < f.size(); ++x)
    f.set(x, v.at(popcount(static_cast<std::uint32_t>(x))));
  return f;
}

inline bool is_symmetric(const boolean_function& f) {
  std::vector<int> seen(f.num_vars() + 1, -1);
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    const int w = popcount(static_cast<std::uint32_t>(x));
    const int b = f.get(x) ? 1 : 0;
    if (seen[w] < 0)
      seen[w] = b;
    else if (seen[w] != b)
      return false;
  }
  return true;
}

inline std::optional<simplified_value_vector> derive_value_vector(const boolean_function& f) {
  simplified_value_vector v{f.num_vars(), std::vector<std::uint8_t>(f.num_vars() + 1, 0)};
  std::vector<int> seen(f.num_vars() + 1, -1);
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    const int w = popcount(static_cast<std::uint32_t>(x));
    const int b = f.get(x) ? 1 : 0;
    if (seen[w] < 0) {
      seen[w] = b;
      v.bits[w] = static_cast<std::uint8_t>(b);
    } else if (seen[w] != b) {
      return std::nullopt;
    }
  }
  return v;
}

/* Value vector of sum_{k in K} sigma_k where sigma_k is the k-th elementary
 * symmetric polynomial: v_i = xor_k C(i,k) mod 2, and C(i,k) is odd exactly
 * when k is a submask of i (Lucas). */
inline simplified_value_vector elementary_symmetric_sum(int n, const std::vector<int>& k_set) {
  simplified_value_vector v{n, std::vector<std::uint8_t>(n + 1, 0)};
  for (int k : k_set)
    if (k < 0 || k > n) fail(errc::out_of_range, "sigma index outside 0..n");
  for (int i = 0; i <= n; ++i) {
    int bit = 0;
    for (int k : k_set)
      if ((static_cast<std::uint32_t>(i) & static_cast<std::uint32_t>(k)) ==
          static_cast<std::uint32_t>(k))
        bit ^= 1;
    v.bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(bit);
  }
  return v;
}

/* f = 1 exactly below weight ceil(n/2); balanced for odd n. */
inline simplified_value_vector majority_vector(int n) {
  if (n % 2 == 0)
    fail(errc::invalid_argument,
         "even n has no balanced symmetric majority cut; see nearest_balanced_even_variant");
  simplified_value_vector v{n, std::vector<std::uint8_t>(n + 1, 0)};
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) v.bits[static_cast<std::size_t>(i)] = 1;
  return v;
}

/* Majority-style vector with one low weight i traded for the high weight
 * n-i: ones on I = {1..floor(n/2), n-i} \ {i}, zeros elsewhere (weight 0
 * stays 0; for even n the overlap at n/2 resolves to I). */
inline simplified_value_vector swapped_weight_vector(int n, int i) {
  if (i < 1 || i > n / 2) fail(errc::out_of_range, "need 1 <= i <= floor(n/2)");
  if (i == n - i) fail(errc::invalid_argument, "i and n-i must differ");
  simplified_value_vector v{n, std::vector<std::uint8_t>(n + 1, 0)};
  for (int w = 1; w <= n / 2; ++w) v.bits[static_cast<std::size_t>(w)] = 1;
  v.bits[static_cast<std::size_t>(n - i)] = 1;
  v.bits[static_cast<std::size_t>(i)] = 0;
  return v;
}

enum class parity_tail { odd_weights, even_weights };

inline int parity_tail_threshold(int n) { return (n % 2 == 1) ? n / 2 : n / 2 - 1; }

/* Head below the threshold is free; from the threshold upward the function
 * is 1 exactly on odd (or exactly on even) weights. */
inline simplified_value_vector corollary3_vector(int n, parity_tail tail,
                                                 const std::vector<std::uint8_t>& low_completion) {
  const int threshold = parity_tail_threshold(n);
  if (static_cast<int>(low_completion.size()) != threshold)
    fail(errc::invalid_argument, "completion must cover weights 0.." + std::to_string(threshold - 1));
  simplified_value_vector v{n, std::vector<std::uint8_t>(n + 1, 0)};
  for (int w = 0; w < threshold; ++w) v.bits[static_cast<std::size_t>(w)] = low_completion[w] ? 1 : 0;
  for (int w = threshold; w <= n; ++w) {
    const bool odd = (w % 2) == 1;
    v.bits[static_cast<std::size_t>(w)] =
        (tail == parity_tail::odd_weights) == odd ? 1 : 0;
  }
  return v;
}

/* One value bit per orbit representative; must cover every orbit. */
struct rsbf_spec {
  int n = 0;
  std::map<std::uint32_t, bool> assignment;
};

inline boolean_function rsbf_expand(const rsbf_spec& spec) {
  const auto orbits = orbit_representatives(spec.n);
  if (spec.assignment.size() != orbits.size())
    fail(errc::incomplete_assignment, "orbit assignment must cover every orbit exactly once");
  for (const auto& o : orbits)
    if (!spec.assignment.count(o.representative))
      fail(errc::incomplete_assignment, "orbit assignment misses a representative");
  boolean_function f(spec.n);
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    const auto rep = orbit_representative(spec.n, static_cast<std::uint32_t>(x));
    f.set(x, spec.assignment.at(rep));
  }
  return f;
}

inline bool is_rotation_symmetric(const boolean_function& f) {
  for (std::uint64_t x = 0; x < f.size(); ++x)
    if (f.get(x) != f.get(rotate_mask(static_cast<std::uint32_t>(x), f.num_vars()))) return false;
  return true;
}

/* Orbit swap on the odd-n majority base: orbits H (inside the zero side,
 * weights >= ceil(n/2)) turn 1 and orbits H' (inside the one side) turn 0.
 * Sizes must match, so the result stays balanced; it is rotation symmetric
 * by construction. h_size = |H| feeds the closed-form certificate. */
struct orbit_swap_result {
  boolean_function f;
  std::uint64_t h_size = 0;
  std::vector<cyclic_orbit> from_zeros;  // H
  std::vector<cyclic_orbit> from_ones;   // H'
};

inline orbit_swap_result orbit_swap_construction(int n, const std::vector<std::uint32_t>& h_reps,
                                                 const std::vector<std::uint32_t>& h_prime_reps) {
  if (n % 2 == 0) fail(errc::invalid_argument, "orbit swap is defined on the odd-n majority base");
  const int half = (n + 1) / 2;
  orbit_swap_result out{symmetric_expand(majority_vector(n)), 0, {}, {}};

  std::set<std::uint32_t> seen;
  std::uint64_t h_total = 0, hp_total = 0;
  for (auto rep : h_reps) {
    const auto o = orbit_of(n, rep);
    if (o.representative != rep) fail(errc::invalid_argument, "orbit must be named by its representative");
    if (popcount(rep) < half) fail(errc::invalid_argument, "H orbit lies on the one side");
    if (!seen.insert(rep).second) fail(errc::invalid_argument, "duplicate orbit");
    h_total += static_cast<std::uint64_t>(o.size);
    out.from_zeros.push_back(o);
  }
  for (auto rep : h_prime_reps) {
    const auto o = orbit_of(n, rep);
    if (o.representative != rep) fail(errc::invalid_argument, "orbit must be named by its representative");
    if (popcount(rep) >= half) fail(errc::invalid_argument, "H' orbit lies on the zero side");
    if (!seen.insert(rep).second) fail(errc::invalid_argument, "duplicate orbit");
    hp_total += static_cast<std::uint64_t>(o.size);
    out.from_ones.push_back(o);
  }
  if (h_total != hp_total) fail(errc::invalid_argument, "swapped sides must have equal cardinality");
  out.h_size = h_total;

  for (std::uint64_t x = 0; x < out.f.size(); ++x) {
    const auto rep = orbit_representative(n, static_cast<std::uint32_t>(x));
    if (seen.count(rep)) out.f.set(x, popcount(rep) >= half);
  }
  return out;
}

/* Even-n variant: 1 below weight n/2, 0 above, and the weight-n/2 orbits
 * greedily set to 1 (smallest representative first) to push the weight
 * toward 2^(n-1). Exact balance is not always reachable; the leftover
 * |wt - 2^(n-1)| is reported instead of hidden. */
struct even_balanced_result {
  boolean_function f;
  std::uint64_t imbalance = 0;
  std::vector<std::uint32_t> ones_orbits;  // weight-n/2 representatives set to 1
};

inline even_balanced_result nearest_balanced_even_variant(int n) {
  if (n % 2 != 0) fail(errc::invalid_argument, "defined for even n");
  even_balanced_result out{boolean_function(n), 0, {}};
  const int half = n / 2;
  for (std::uint64_t x = 0; x < out.f.size(); ++x)
    out.f.set(x, popcount(static_cast<std::uint32_t>(x)) < half);

  std::uint64_t need = (std::uint64_t{1} << (n - 1)) - out.f.weight();
  for (const auto& o : orbit_representatives(n)) {
    if (popcount(o.representative) != half) continue;
    if (static_cast<std::uint64_t>(o.size) > need) continue;
    need -= static_cast<std::uint64_t>(o.size);
    out.ones_orbits.push_back(o.representative);
  }
  for (auto rep : out.ones_orbits) {
    const auto o = orbit_of(n, rep);
    std::uint32_t m = rep;
    for (int i = 0; i < o.size; ++i) {
      out.f.set(m, true);
      m = rotate_mask(m, n);
    }
  }
  out.imbalance = need;
  return out;
}

}  // namespace bfai
