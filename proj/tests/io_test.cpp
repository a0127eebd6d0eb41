#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bfai/io.hpp"

using namespace bfai;

TEST_CASE("hex tables") {
  boolean_function and2(2);
  and2.set(3, true);
  CHECK(to_hex(and2) == "8");
  boolean_function x1(2);
  x1.set(1, true);
  x1.set(3, true);
  CHECK(to_hex(x1) == "A");

  CHECK(from_hex("8") == and2);
  CHECK(from_hex("a") == x1);  // lowercase accepted
  CHECK(from_hex("8", 2) == and2);

  CHECK_THROWS_AS(from_hex(""), error);
  CHECK_THROWS_AS(from_hex("8Z"), error);
  CHECK_THROWS_AS(from_hex("88", 2), error);   // length mismatch
  CHECK_THROWS_AS(from_hex("888"), error);     // not a power of two
  CHECK_THROWS_AS(from_hex("8", 1), error);    // high bits in a 1-variable digit

  // n = 1 round trip needs the explicit variable count
  boolean_function not1(1);
  not1.set(0, true);
  CHECK(to_hex(not1) == "1");
  CHECK(from_hex("1", 1) == not1);
}

TEST_CASE("hex round trip on random tables") {
  std::mt19937_64 rng(103);
  for (int n : {1, 2, 3, 5, 8}) {
    for (int rep = 0; rep < 10; ++rep) {
      const auto f = random_function(n, rng);
      CHECK(from_hex(to_hex(f), n) == f);
    }
  }
}

TEST_CASE("anf expressions") {
  const auto p = parse_anf("x1*x2 + 1", 2);
  CHECK(p.get(0));
  CHECK(p.get(3));
  CHECK(table_from_anf(p).get(0) == true);   // 1 + x1 x2 at the origin
  CHECK(table_from_anf(p).get(3) == false);

  CHECK(anf_to_string(p) == "1 + x1*x2");
  CHECK(anf_to_string(anf_polynomial(3)) == "0");

  // duplicate terms cancel over GF(2)
  CHECK(parse_anf("x1 + x1", 2).is_zero());

  // whitespace is free
  CHECK(parse_anf("  x2 *x1+ 1 ", 2) == p);

  CHECK_THROWS_AS(parse_anf("x3", 2), error);
  CHECK_THROWS_AS(parse_anf("x1 +", 2), error);
  CHECK_THROWS_AS(parse_anf("y1", 2), error);
  CHECK_THROWS_AS(parse_anf("", 2), error);
  CHECK_THROWS_AS(parse_anf("x1 x2", 2), error);
}

TEST_CASE("anf parse then serialize is the identity on canonical strings") {
  std::mt19937_64 rng(107);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto f = random_function(n, rng);
    const auto canonical = anf_to_string(anf_from_table(f));
    if (canonical == "0") continue;
    CHECK(anf_to_string(parse_anf(canonical, n)) == canonical);
  }
}

TEST_CASE("affine form parsing") {
  const auto l = parse_affine_form("x1 + x3 + 1", 3);
  CHECK(l.mask == 0b101);
  CHECK(l.constant_term);
  CHECK_THROWS_AS(parse_affine_form("x1*x2", 2), error);
  CHECK_THROWS_AS(parse_affine_form("1", 2), error);
}

TEST_CASE("value vector strings") {
  const auto v = parse_value_vector("0011111100000011");
  CHECK(v.n == 15);
  CHECK(value_vector_to_string(v) == "0011111100000011");
  CHECK_THROWS_AS(parse_value_vector("01x"), error);
  CHECK_THROWS_AS(parse_value_vector("1"), error);
}

TEST_CASE("orbit files") {
  const auto f = symmetric_expand(majority_vector(5));
  const auto text = orbit_file_from_function(f);
  const auto spec = parse_orbit_file(text, 5);
  CHECK(rsbf_expand(spec) == f);
  CHECK(orbit_file_from_function(rsbf_expand(spec)) == text);

  CHECK_THROWS_AS(parse_orbit_file("6 1\n", 5), error);       // 6 rotates down to 3
  CHECK_THROWS_AS(parse_orbit_file("1 1\n1 0\n", 5), error);  // duplicate
  CHECK_THROWS_AS(parse_orbit_file("1 2\n", 5), error);       // bad bit
  CHECK_THROWS_AS(parse_orbit_file("1 1 junk\n", 5), error);

  std::mt19937_64 rng(109);
  auto g = random_function(4, rng);
  if (is_rotation_symmetric(g)) g.set(1, !g.get(1));
  CHECK_THROWS_AS(orbit_file_from_function(g), error);
}

TEST_CASE("parse_function dispatch") {
  boolean_function and2(2);
  and2.set(3, true);
  CHECK(parse_function({input_format::hex_table, "8", std::nullopt}) == and2);
  CHECK(parse_function({input_format::anf_expr, "x1*x2 + 1", 2}) == and2.complemented());
  CHECK(parse_function({input_format::value_vector, "0011111100000011", std::nullopt}).weight() ==
        16384);
  CHECK_THROWS_AS(parse_function({input_format::anf_expr, "x1", std::nullopt}), error);
  CHECK_THROWS_AS(parse_function({input_format::value_vector, "0101", 5}), error);
  const auto f = symmetric_expand(majority_vector(5));
  CHECK(parse_function({input_format::orbit_file, orbit_file_from_function(f), 5}) == f);
}
