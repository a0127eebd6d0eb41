#pragma once

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bfai/anf.hpp"
#include "bfai/affine.hpp"
#include "bfai/boolean_function.hpp"
#include "bfai/families.hpp"

namespace bfai {

/* ---- truth-table hex: the 2^n table bits as a big-endian hex string (bit
 * at index 2^n - 1 first). n=2, f = x1*x2 -> "8"; f = x1 -> "A". ---------- */

inline std::string to_hex(const boolean_function& f) {
  if (f.num_vars() == 1) {
    const int v = (f.get(1) << 1) | static_cast<int>(f.get(0));
    return std::string(1, "0123456789ABCDEF"[v]);
  }
  const std::uint64_t digits = f.size() / 4;
  std::string out(digits, '0');
  for (std::uint64_t d = 0; d < digits; ++d) {
    int v = 0;
    for (int b = 3; b >= 0; --b) v = (v << 1) | static_cast<int>(f.get((digits - 1 - d) * 4 + b));
    out[d] = "0123456789ABCDEF"[v];
  }
  return out;
}

inline int hex_digit(char c, std::size_t pos) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  fail(errc::parse, "bad hex digit at position " + std::to_string(pos));
}

inline boolean_function from_hex(const std::string& hex, std::optional<int> n = std::nullopt) {
  if (hex.empty()) fail(errc::parse, "empty hex table");
  int vars;
  if (n) {
    vars = *n;
    const std::size_t expect = vars == 1 ? 1 : (std::size_t{1} << vars) / 4;
    if (hex.size() != expect)
      fail(errc::dimension_mismatch, "hex table length does not match n=" + std::to_string(vars));
  } else {
    const std::uint64_t bits = 4 * static_cast<std::uint64_t>(hex.size());
    if ((bits & (bits - 1)) != 0)
      fail(errc::parse, "hex table length must be a power of two");
    vars = floor_log2(bits);
    if (vars < 2 || vars > max_vars) fail(errc::parse, "hex table size out of range");
  }
  boolean_function f(vars);
  if (vars == 1) {
    const int v = hex_digit(hex[0], 0);
    if (v > 3) fail(errc::parse, "a 1-variable table uses only the low two bits");
    f.set(0, v & 1);
    f.set(1, (v >> 1) & 1);
    return f;
  }
  const std::uint64_t digits = hex.size();
  for (std::uint64_t d = 0; d < digits; ++d) {
    const int v = hex_digit(hex[d], d);
    for (int b = 0; b < 4; ++b) f.set((digits - 1 - d) * 4 + b, (v >> b) & 1);
  }
  return f;
}

/* ---- ANF expressions: '+'-separated terms, term = "1" or '*'-joined
 * factors "x<i>", whitespace ignored, i in 1..n. Duplicate terms cancel
 * over GF(2). Serialization lists terms by (degree, mask). --------------- */

namespace detail {

struct anf_parser {
  const std::string& text;
  int n;
  std::size_t pos = 0;

  [[noreturn]] void die(const std::string& what) const {
    fail(errc::parse, what + " at position " + std::to_string(pos));
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::uint32_t parse_factor() {
    skip_ws();
    if (pos >= text.size()) die("expected a factor");
    if (text[pos] == '1') {
      ++pos;
      return 0;
    }
    if (text[pos] != 'x' && text[pos] != 'X') die("expected 'x<i>' or '1'");
    ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      die("expected a variable index");
    std::uint64_t idx = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      idx = idx * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (idx > max_vars) die("variable index too large");
      ++pos;
    }
    if (idx < 1 || static_cast<int>(idx) > n)
      fail(errc::dimension_mismatch,
           "variable x" + std::to_string(idx) + " outside 1..n at position " + std::to_string(pos));
    return std::uint32_t{1} << (idx - 1);
  }

  std::uint32_t parse_term() {
    std::uint32_t mask = parse_factor();
    while (eat('*')) mask |= parse_factor();
    return mask;
  }
};

}  // namespace detail

inline anf_polynomial parse_anf(const std::string& text, int n) {
  if (n < 1 || n > max_vars) fail(errc::invalid_argument, "bad variable count");
  detail::anf_parser p{text, n};
  anf_polynomial poly(n);
  std::uint32_t mask = p.parse_term();
  poly.set(mask, poly.get(mask) ^ true);
  while (true) {
    p.skip_ws();
    if (p.pos >= text.size()) break;
    if (!p.eat('+')) p.die("expected '+'");
    mask = p.parse_term();
    poly.set(mask, poly.get(mask) ^ true);
  }
  return poly;
}

inline std::string anf_to_string(const anf_polynomial& p) {
  const auto masks = p.monomials();  // already (degree, value) ordered
  if (masks.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (i) out += " + ";
    if (masks[i] == 0) {
      out += "1";
      continue;
    }
    bool first = true;
    for (int v = 0; v < p.num_vars(); ++v)
      if ((masks[i] >> v) & 1) {
        if (!first) out += "*";
        out += "x" + std::to_string(v + 1);
        first = false;
      }
  }
  return out;
}

/* An affine form written in the same grammar, e.g. "x1 + x3 + 1". */
inline affine_form parse_affine_form(const std::string& text, int n) {
  const anf_polynomial p = parse_anf(text, n);
  affine_form l;
  for (auto mask : p.monomials()) {
    if (mask == 0)
      l.constant_term = !l.constant_term;
    else if (popcount(mask) == 1)
      l.mask |= mask;
    else
      fail(errc::degenerate_form, "form has a nonlinear term");
  }
  if (l.degenerate()) fail(errc::degenerate_form, "form is constant");
  return l;
}

/* ---- value vectors: bits v_0..v_n as a 0/1 string ----------------------- */

inline std::string value_vector_to_string(const simplified_value_vector& v) {
  std::string s(v.bits.size(), '0');
  for (std::size_t i = 0; i < v.bits.size(); ++i)
    if (v.bits[i]) s[i] = '1';
  return s;
}

inline simplified_value_vector parse_value_vector(const std::string& text) {
  if (text.size() < 2 || text.size() > static_cast<std::size_t>(max_vars) + 1)
    fail(errc::parse, "value vector must list v_0..v_n");
  std::vector<std::uint8_t> bits(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1')
      fail(errc::parse, "value vector entries are 0/1, bad character at position " + std::to_string(i));
    bits[i] = text[i] == '1';
  }
  return make_value_vector(static_cast<int>(text.size()) - 1, std::move(bits));
}

/* ---- orbit files: one "representative-hex value-bit" line per orbit ----- */

inline rsbf_spec parse_orbit_file(const std::string& text, int n) {
  rsbf_spec spec{n, {}};
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream row(line);
    std::string rep_hex, bit;
    if (!(row >> rep_hex)) continue;  // blank line
    if (!(row >> bit) || (bit != "0" && bit != "1"))
      fail(errc::parse, "orbit line " + std::to_string(line_no) + " needs 'rep-hex 0|1'");
    std::string trailing;
    if (row >> trailing) fail(errc::parse, "trailing text on orbit line " + std::to_string(line_no));
    std::uint64_t rep = 0;
    for (std::size_t i = 0; i < rep_hex.size(); ++i) {
      rep = rep * 16 + static_cast<std::uint64_t>(hex_digit(rep_hex[i], i));
      if (rep >> n) fail(errc::out_of_range, "representative outside F_2^n on line " + std::to_string(line_no));
    }
    const auto mask = static_cast<std::uint32_t>(rep);
    if (orbit_representative(n, mask) != mask)
      fail(errc::parse, "line " + std::to_string(line_no) + ": not the minimal rotation of its orbit");
    if (!spec.assignment.emplace(mask, bit == "1").second)
      fail(errc::parse, "duplicate orbit on line " + std::to_string(line_no));
  }
  return spec;
}

inline std::string orbit_file_from_function(const boolean_function& f) {
  if (!is_rotation_symmetric(f)) fail(errc::not_rotation_symmetric, "function is not rotation symmetric");
  std::ostringstream out;
  char buf[16];
  for (const auto& o : orbit_representatives(f.num_vars())) {
    std::snprintf(buf, sizeof buf, "%X", o.representative);
    out << buf << ' ' << (f.get(o.representative) ? '1' : '0') << '\n';
  }
  return out.str();
}

/* ---- format-tagged ingestion (the CLI's one entry point) ----------------- */

enum class input_format { hex_table, anf_expr, value_vector, orbit_file };

struct function_input {
  input_format format = input_format::hex_table;
  std::string payload;
  std::optional<int> n;
};

inline boolean_function parse_function(const function_input& in) {
  switch (in.format) {
    case input_format::hex_table:
      return from_hex(in.payload, in.n);
    case input_format::anf_expr:
      if (!in.n) fail(errc::invalid_argument, "ANF input needs an explicit n");
      return table_from_anf(parse_anf(in.payload, *in.n));
    case input_format::value_vector: {
      const auto v = parse_value_vector(in.payload);
      if (in.n && *in.n != v.n)
        fail(errc::dimension_mismatch, "value vector length disagrees with n");
      return symmetric_expand(v);
    }
    case input_format::orbit_file:
      if (!in.n) fail(errc::invalid_argument, "orbit file input needs an explicit n");
      return rsbf_expand(parse_orbit_file(in.payload, *in.n));
  }
  fail(errc::invalid_argument, "unknown input format");
}

}  // namespace bfai
