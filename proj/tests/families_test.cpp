#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "bfai/annihilator.hpp"
#include "bfai/bounds.hpp"
#include "bfai/families.hpp"
#include "bfai/io.hpp"

using namespace bfai;

namespace {

// Burnside: number of binary necklaces of length n
std::uint64_t necklace_count(int n) {
  auto totient = [](int m) {
    int result = m;
    for (int p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        while (m % p == 0) m /= p;
        result -= result / p;
      }
    if (m > 1) result -= result / m;
    return result;
  };
  std::uint64_t sum = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) sum += static_cast<std::uint64_t>(totient(d)) << (n / d);
  return sum / static_cast<std::uint64_t>(n);
}

}  // namespace

TEST_CASE("symmetric expansion") {
  const auto x1 = symmetric_expand(make_value_vector(1, {0, 1}));
  CHECK(x1.get(0) == false);
  CHECK(x1.get(1) == true);

  const auto f3 = symmetric_expand(make_value_vector(3, {1, 1, 0, 0}));
  CHECK(f3.weight() == 4);
  CHECK(is_symmetric(f3));

  const auto f15 = symmetric_expand(parse_value_vector("0011111100000011"));
  CHECK(f15.weight() == 16384);
  CHECK(f15.balanced());
}

TEST_CASE("value vector round trip") {
  std::mt19937_64 rng(89);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 10);
    std::vector<std::uint8_t> bits(n + 1);
    for (auto& b : bits) b = rng() & 1;
    const auto v = make_value_vector(n, bits);
    const auto back = derive_value_vector(symmetric_expand(v));
    REQUIRE(back.has_value());
    CHECK(back->bits == v.bits);
  }
  std::mt19937_64 rng2(91);
  auto g = random_function(5, rng2);
  if (is_symmetric(g)) g.set(3, !g.get(3));
  CHECK(!derive_value_vector(g).has_value());
}

TEST_CASE("elementary symmetric sums via lucas") {
  CHECK(value_vector_to_string(elementary_symmetric_sum(3, {1})) == "0101");
  CHECK(value_vector_to_string(elementary_symmetric_sum(4, {4})) == "00001");

  const auto v = elementary_symmetric_sum(15, {2, 4, 6, 10, 12, 14});
  const auto printed = parse_value_vector("0011111100000011");
  for (int w = 0; w <= 13; ++w) CHECK(v.at(w) == printed.at(w));
  CHECK(v.at(14) == false);  // the published vector carries 1 here
  CHECK(v.at(15) == false);

  // the sigma expansion really equals the sum of products on the table
  const auto f = symmetric_expand(elementary_symmetric_sum(4, {2}));
  for (std::uint32_t x = 0; x < 16; ++x) {
    int pairs = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (((x >> i) & 1) && ((x >> j) & 1)) ++pairs;
    CHECK(f.get(x) == (pairs % 2 == 1));
  }
}

TEST_CASE("both example-1 vector variants give U = 246") {
  const auto printed = parse_value_vector("0011111100000011");
  const auto lucas = elementary_symmetric_sum(15, {2, 4, 6, 10, 12, 14});
  const auto up = std::get<corollary4_evidence>(corollary4_bound(printed).evidence);
  const auto ul = std::get<corollary4_evidence>(corollary4_bound(lucas).evidence);
  CHECK(up.u_value == 246);
  CHECK(ul.u_value == 246);
  CHECK(ul.sum_high_zeros == 255);
  CHECK(corollary4_bound(printed).bound == 5);
  CHECK(corollary4_bound(lucas).bound == 5);
}

TEST_CASE("majority vectors") {
  CHECK(value_vector_to_string(majority_vector(5)) == "111000");
  CHECK(value_vector_to_string(majority_vector(3)) == "1100");
  CHECK(symmetric_expand(majority_vector(5)).weight() == 16);
  CHECK(symmetric_expand(majority_vector(5)).balanced());
  CHECK_THROWS_AS(majority_vector(6), error);
  CHECK(exact_ai(symmetric_expand(majority_vector(7))).ai == 4);
}

TEST_CASE("swapped weight vectors (the example2 family)") {
  CHECK(value_vector_to_string(swapped_weight_vector(9, 2)) == "0101100100");
  CHECK_THROWS_AS(swapped_weight_vector(9, 5), error);
  CHECK_THROWS_AS(swapped_weight_vector(8, 4), error);  // i = n - i

  // n=9, i=1: t = 3 (C(5,1)+1 = 6 < 8), claimed bound 5-3+1 = 3
  const auto v = swapped_weight_vector(9, 1);
  const auto c = corollary4_bound(v);
  CHECK(c.bound >= 3);
  // and i=2: C(5,2)+1 = 11 < 16, t = 4, claimed bound 2
  CHECK(corollary4_bound(swapped_weight_vector(9, 2)).bound >= 2);
}

TEST_CASE("corollary 3 vectors") {
  CHECK(value_vector_to_string(corollary3_vector(5, parity_tail::odd_weights, {0, 0})) == "000101");
  CHECK(value_vector_to_string(corollary3_vector(6, parity_tail::even_weights, {0, 0})) ==
        "0010101");
  CHECK_THROWS_AS(corollary3_vector(5, parity_tail::odd_weights, {0, 0, 0}), error);

  // every completion at n in {5, 6} fails maximality
  for (int n : {5, 6}) {
    const int threshold = parity_tail_threshold(n);
    for (std::uint32_t c = 0; c < (1u << threshold); ++c) {
      std::vector<std::uint8_t> low(threshold);
      for (int i = 0; i < threshold; ++i) low[i] = (c >> i) & 1;
      for (auto tail : {parity_tail::odd_weights, parity_tail::even_weights}) {
        const auto f = symmetric_expand(corollary3_vector(n, tail, low));
        CHECK(exact_ai(f).ai < (n + 1) / 2);
      }
    }
  }
}

TEST_CASE("orbits under the circular action") {
  const auto o = orbit_of(6, 0b101101);  // {x1, x3, x4, x6}
  CHECK(o.size == 3);
  CHECK(o.representative == 0b011011);
  CHECK(orbit_of(6, 0b111111).size == 1);
  CHECK(orbit_of(6, 0b000001).size == 6);

  for (int n : {1, 4, 6, 9}) {
    const auto orbits = orbit_representatives(n);
    CHECK(orbits.size() == necklace_count(n));
    std::uint64_t total = 0;
    for (const auto& ob : orbits) {
      CHECK(n % ob.size == 0);
      CHECK(ob.representative == orbit_representative(n, ob.representative));
      total += static_cast<std::uint64_t>(ob.size);
    }
    CHECK(total == std::uint64_t{1} << n);
  }
  CHECK(orbit_representatives(6).size() == 14);
  CHECK(orbit_representatives(1).size() == 2);

  // rotation preserves weight, so orbits partition each weight class
  for (int w = 0; w <= 6; ++w) {
    std::uint64_t cls = 0;
    for (const auto& ob : orbit_representatives(6))
      if (popcount(ob.representative) == w) cls += static_cast<std::uint64_t>(ob.size);
    CHECK(cls == binomial(6, w));
  }
}

TEST_CASE("rsbf expansion and the rotation test") {
  // every symmetric function is rotation symmetric
  std::mt19937_64 rng(97);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<std::uint8_t> bits(7);
    for (auto& b : bits) b = rng() & 1;
    CHECK(is_rotation_symmetric(symmetric_expand(make_value_vector(6, bits))));
  }

  boolean_function x1(3);
  x1.set(1, true);
  x1.set(3, true);
  x1.set(5, true);
  x1.set(7, true);
  CHECK(!is_rotation_symmetric(x1));

  rsbf_spec spec{4, {}};
  for (const auto& o : orbit_representatives(4)) spec.assignment[o.representative] = rng() & 1;
  const auto f = rsbf_expand(spec);
  CHECK(is_rotation_symmetric(f));

  rsbf_spec incomplete{4, {{0, true}}};
  CHECK_THROWS_AS(rsbf_expand(incomplete), error);
}

TEST_CASE("orbit swap construction validates its inputs") {
  const std::uint32_t w5 = orbit_representative(9, 0b000011111);
  const std::uint32_t w4 = orbit_representative(9, 0b000001111);
  const auto r = orbit_swap_construction(9, {w5}, {w4});
  CHECK(r.h_size == 9);
  CHECK(r.f.balanced());
  CHECK(is_rotation_symmetric(r.f));
  // swapped points really moved sides
  CHECK(r.f.get(w5) == true);
  CHECK(r.f.get(w4) == false);

  CHECK_THROWS_AS(orbit_swap_construction(8, {}, {}), error);
  CHECK_THROWS_AS(orbit_swap_construction(9, {w4}, {w5}), error);  // wrong sides
  CHECK_THROWS_AS(orbit_swap_construction(9, {w5}, {}), error);    // size mismatch
  const std::uint32_t rotated = rotate_mask(w5, 9);                // orbit member, not minimal
  CHECK(rotated != orbit_representative(9, rotated));
  CHECK_THROWS_AS(orbit_swap_construction(9, {rotated}, {w4}), error);
}

TEST_CASE("nearest balanced even variant") {
  const auto r6 = nearest_balanced_even_variant(6);
  CHECK(r6.imbalance == 2);
  CHECK(is_rotation_symmetric(r6.f));
  CHECK(r6.f.weight() + r6.imbalance == 32);

  const auto r8 = nearest_balanced_even_variant(8);
  CHECK(r8.imbalance == 1);
  CHECK(is_rotation_symmetric(r8.f));

  const auto r2 = nearest_balanced_even_variant(2);
  CHECK(r2.imbalance == 1);

  CHECK_THROWS_AS(nearest_balanced_even_variant(5), error);

  // weight-3 orbit sizes of n=6 are {6, 6, 6, 2}: no subset sums to 10
  std::vector<int> sizes;
  for (const auto& o : orbit_representatives(6))
    if (popcount(o.representative) == 3) sizes.push_back(o.size);
  CHECK(std::accumulate(sizes.begin(), sizes.end(), 0) == 20);
  for (std::uint32_t pick = 0; pick < (1u << sizes.size()); ++pick) {
    int sum = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i)
      if ((pick >> i) & 1) sum += sizes[i];
    CHECK(sum != 10);
  }
}

TEST_CASE("corollary 5 constructions stay above their certificates at desk scale") {
  std::mt19937_64 rng(101);
  for (int n : {7, 9}) {
    const int half = (n + 1) / 2;
    std::vector<std::uint32_t> zeros_side, ones_side;
    for (const auto& o : orbit_representatives(n)) {
      if (o.size != n) continue;  // full-period orbits keep |H| = |H'| easy
      if (popcount(o.representative) >= half)
        zeros_side.push_back(o.representative);
      else if (popcount(o.representative) >= 1)
        ones_side.push_back(o.representative);
    }
    for (int rep = 0; rep < 3; ++rep) {
      const auto h = zeros_side[rng() % zeros_side.size()];
      const auto hp = ones_side[rng() % ones_side.size()];
      auto [r, cert] = orbit_swap_certified(n, {h}, {hp});
      const int ai = exact_ai(r.f).ai;
      CHECK(r.f.balanced());
      CHECK(is_rotation_symmetric(r.f));
      CHECK(ai >= cert.bound);
      CHECK(ai >= coverage_certifier(r.f, symmetry_mode::rotation).bound);
    }
  }
}
