#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bfai/bits.hpp"
#include "bfai/errors.hpp"

namespace bfai {

/*! \brief Bit-packed truth table of an n-variable function over F_2.
 *
 * The value at the point (x_1,...,x_n) sits at table index sum x_i 2^(i-1),
 * i.e. x_1 is the least significant bit of the index. Every module and every
 * serialization format shares this encoding.
 */
class boolean_function {
 public:
  explicit boolean_function(int n) : n_(checked_vars(n)), words_(word_count(n_), 0) {}

  static boolean_function constant(int n, bool value) {
    boolean_function f(n);
    if (value) {
      for (auto& w : f.words_) w = ~std::uint64_t{0};
      f.trim();
    }
    return f;
  }

  int num_vars() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

  bool get(std::uint64_t idx) const { return (words_[idx >> 6] >> (idx & 63)) & 1; }

  void set(std::uint64_t idx, bool v) {
    const std::uint64_t bit = std::uint64_t{1} << (idx & 63);
    if (v)
      words_[idx >> 6] |= bit;
    else
      words_[idx >> 6] &= ~bit;
  }

  bool evaluate(std::uint64_t x) const {
    if (x >= size()) fail(errc::out_of_range, "point index out of range");
    return get(x);
  }

  std::uint64_t weight() const {
    std::uint64_t w = 0;
    for (auto word : words_) w += popcount(word);
    return w;
  }

  bool balanced() const { return weight() == size() / 2; }
  bool is_zero() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /* 1 + f */
  boolean_function complemented() const {
    boolean_function g(*this);
    for (auto& w : g.words_) w = ~w;
    g.trim();
    return g;
  }

  std::vector<std::uint32_t> support() const {
    std::vector<std::uint32_t> pts;
    pts.reserve(weight());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const int b = std::countr_zero(w);
        pts.push_back(static_cast<std::uint32_t>(wi * 64 + b));
        w &= w - 1;
      }
    }
    return pts;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  friend boolean_function operator^(const boolean_function& a, const boolean_function& b) {
    check_same(a, b);
    boolean_function r(a);
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] ^= b.words_[i];
    return r;
  }

  /* pointwise product g*f over F_2 */
  friend boolean_function operator&(const boolean_function& a, const boolean_function& b) {
    check_same(a, b);
    boolean_function r(a);
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= b.words_[i];
    return r;
  }

  friend bool operator==(const boolean_function& a, const boolean_function& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend bool operator!=(const boolean_function& a, const boolean_function& b) { return !(a == b); }

 private:
  static int checked_vars(int n) {
    if (n < 1 || n > max_vars)
      fail(errc::invalid_argument, "variable count must be between 1 and " + std::to_string(max_vars));
    return n;
  }

  static std::size_t word_count(int n) { return ((std::uint64_t{1} << n) + 63) / 64; }

  static void check_same(const boolean_function& a, const boolean_function& b) {
    if (a.n_ != b.n_) fail(errc::dimension_mismatch, "variable counts differ");
  }

  /* keep bits past 2^n clear so that weight() and == stay honest */
  void trim() {
    if (n_ < 6) words_[0] &= (std::uint64_t{1} << size()) - 1;
  }

  int n_;
  std::vector<std::uint64_t> words_;
};

inline boolean_function random_function(int n, std::mt19937_64& rng) {
  boolean_function f(n);
  for (auto& w : f.words()) w = rng();
  if (n < 6) f.words()[0] &= (std::uint64_t{1} << f.size()) - 1;
  return f;
}

}  // namespace bfai
