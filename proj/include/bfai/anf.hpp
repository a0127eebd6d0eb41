#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bfai/boolean_function.hpp"

namespace bfai {
namespace detail {

/* In-place fast Moebius transform (an involution): butterfly over the n index
 * bits, word-parallel for the six in-word strides. */
inline void moebius_inplace(std::vector<std::uint64_t>& w, int n) {
  static constexpr std::uint64_t lo_mask[6] = {
      0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
      0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};
  for (int i = 0; i < n && i < 6; ++i)
    for (auto& word : w) word ^= (word & lo_mask[i]) << (1u << i);
  for (int i = 6; i < n; ++i) {
    const std::size_t stride = std::size_t{1} << (i - 6);
    for (std::size_t base = 0; base < w.size(); base += 2 * stride)
      for (std::size_t j = 0; j < stride; ++j) w[base + stride + j] ^= w[base + j];
  }
}

}  // namespace detail

/*! \brief Algebraic normal form: one coefficient bit per monomial mask.
 *
 * The bit at mask u is the coefficient of prod_{i in u} x_i; mask 0 is the
 * constant term. Masks use the same x_1-is-LSB convention as truth tables.
 */
class anf_polynomial {
 public:
  explicit anf_polynomial(int n) : table_(n) {}

  int num_vars() const { return table_.num_vars(); }
  std::uint64_t size() const { return table_.size(); }

  bool get(std::uint64_t mask) const { return table_.get(mask); }
  void set(std::uint64_t mask, bool v) { table_.set(mask, v); }
  bool is_zero() const { return table_.is_zero(); }

  std::vector<std::uint32_t> monomials() const { return table_.support(); }

  /* Degree of the polynomial: max popcount over set masks. The zero
   * polynomial has no degree (nullopt), deliberately distinct from 0. */
  std::optional<int> degree() const {
    std::optional<int> d;
    for (auto mask : table_.support()) {
      const int p = popcount(mask);
      if (!d || p > *d) d = p;
    }
    return d;
  }

  const std::vector<std::uint64_t>& words() const { return table_.words(); }
  std::vector<std::uint64_t>& words() { return table_.words(); }

  friend bool operator==(const anf_polynomial& a, const anf_polynomial& b) {
    return a.table_ == b.table_;
  }
  friend bool operator!=(const anf_polynomial& a, const anf_polynomial& b) { return !(a == b); }

 private:
  boolean_function table_;
};

inline anf_polynomial anf_from_table(const boolean_function& f) {
  anf_polynomial p(f.num_vars());
  p.words() = f.words();
  detail::moebius_inplace(p.words(), p.num_vars());
  return p;
}

inline boolean_function table_from_anf(const anf_polynomial& p) {
  boolean_function f(p.num_vars());
  f.words() = p.words();
  detail::moebius_inplace(f.words(), f.num_vars());
  return f;
}

inline std::optional<int> algebraic_degree(const boolean_function& f) {
  return anf_from_table(f).degree();
}

}  // namespace bfai
