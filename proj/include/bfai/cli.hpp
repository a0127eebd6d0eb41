#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bfai/bounds.hpp"
#include "bfai/io.hpp"
#include "bfai/oracle.hpp"
#include "bfai/report.hpp"

namespace bfai::cli {

/* Exit codes: 0 success, 1 invalid input (or a scan that found
 * counterexamples), 2 a required computation hit its work budget. */
inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 1;
inline constexpr int exit_cost = 2;

namespace detail {

inline input_format parse_format(const std::string& name) {
  if (name == "hex") return input_format::hex_table;
  if (name == "anf") return input_format::anf_expr;
  if (name == "vector") return input_format::value_vector;
  if (name == "orbits") return input_format::orbit_file;
  fail(errc::invalid_argument, "unknown format: " + name);
}

inline std::optional<symmetry_mode> parse_symmetry(const std::string& name) {
  if (name.empty() || name == "auto") return std::nullopt;
  if (name == "generic") return symmetry_mode::generic;
  if (name == "symmetric") return symmetry_mode::symmetric;
  if (name == "rotation") return symmetry_mode::rotation;
  fail(errc::invalid_argument, "unknown symmetry mode: " + name);
}

inline std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

inline std::vector<std::uint32_t> parse_hex_list(const std::string& csv) {
  std::vector<std::uint32_t> out;
  for (const auto& tok : split_list(csv)) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < tok.size(); ++i) v = v * 16 + hex_digit(tok[i], i);
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

struct input_args {
  std::string payload;
  std::string file;
  std::string format = "hex";
  int n = 0;  // 0 = not given
};

inline boolean_function load_function(const input_args& in) {
  function_input fi;
  fi.format = parse_format(in.format);
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) fail(errc::invalid_argument, "cannot open " + in.file);
    std::ostringstream buf;
    buf << f.rdbuf();
    fi.payload = buf.str();
  } else {
    fi.payload = in.payload;
  }
  if (fi.format != input_format::orbit_file) {
    // strip surrounding whitespace so file payloads behave like arguments
    const auto b = fi.payload.find_first_not_of(" \t\r\n");
    const auto e = fi.payload.find_last_not_of(" \t\r\n");
    fi.payload = b == std::string::npos ? "" : fi.payload.substr(b, e - b + 1);
  }
  if (in.n > 0) fi.n = in.n;
  return parse_function(fi);
}

inline void add_input_options(CLI::App* cmd, input_args& in) {
  cmd->add_option("payload", in.payload, "function payload (table hex / ANF / value vector)");
  cmd->add_option("--in", in.file, "read the payload from a file");
  cmd->add_option("--format", in.format, "payload format: hex|anf|vector|orbits")
      ->default_val("hex");
  cmd->add_option("--n", in.n, "variable count (required for anf and orbits)");
}

inline std::string function_block_payload(const boolean_function& f, const std::string& fmt) {
  if (fmt == "hex") return to_hex(f);
  if (fmt == "anf") return anf_to_string(anf_from_table(f));
  if (fmt == "vector") {
    const auto v = derive_value_vector(f);
    if (!v) fail(errc::not_symmetric, "vector output needs a symmetric function");
    return value_vector_to_string(*v);
  }
  if (fmt == "orbits") return orbit_file_from_function(f);
  fail(errc::invalid_argument, "unknown output format: " + fmt);
}

inline json function_block(const boolean_function& f, const std::string& fmt) {
  return json{{"format", fmt}, {"payload", function_block_payload(f, fmt)}, {"n", f.num_vars()}};
}

/* the commonly published value vector for sigma-sum {2,4,6,10,12,14} at
 * n=15; the Lucas expansion disagrees with it at weights 14 and 15 */
inline constexpr const char* sigma15_reference_vector = "0011111100000011";

}  // namespace detail

/* ---- analyze -------------------------------------------------------------- */

inline int run_analyze(const detail::input_args& in, const std::vector<std::string>& exact_ai_arg,
                       const std::string& certify_csv, const std::string& symmetry,
                       std::uint64_t budget, const std::string& output, std::ostream& out) {
  const boolean_function f = detail::load_function(in);
  analysis_options opt;
  opt.budget = budget;
  opt.certify = detail::split_list(certify_csv);
  opt.symmetry = detail::parse_symmetry(symmetry);
  if (!exact_ai_arg.empty()) {
    opt.exact_ai = true;
    if (!exact_ai_arg.front().empty()) opt.exact_ai_max_d = std::stoi(exact_ai_arg.front());
  }
  const analysis_report r = analyze(f, opt);
  if (output == "json") {
    out << to_json(r).dump(2) << '\n';
    return exit_ok;
  }
  out << "n:                  " << r.n << '\n'
      << "weight:             " << r.weight << (r.balanced ? " (balanced)" : "") << '\n'
      << "degree:             " << (r.degree ? std::to_string(*r.degree) : std::string("zero function"))
      << '\n'
      << "nonlinearity:       " << r.nonlinearity << '\n'
      << "delta:              " << r.delta << '\n'
      << "pc_order:           " << r.pc_order << '\n'
      << "symmetric:          " << (r.symmetric ? "yes" : "no") << '\n'
      << "rotation symmetric: " << (r.rotation_symmetric ? "yes" : "no") << '\n';
  if (r.ai_exact) {
    out << "exact AI:           " << *r.ai_exact << '\n';
    if (r.witness_anf)
      out << "witness:            " << *r.witness_anf << " annihilates " << *r.witness_side << '\n';
  } else if (r.ai_requested) {
    out << "exact AI:           not determined within the budget\n";
  }
  for (const auto& c : r.lower_bounds)
    out << "bound " << bound_method_name(c.method) << ":     AI >= " << c.bound << '\n';
  return exit_ok;
}

/* ---- certify -------------------------------------------------------------- */

inline int run_certify(const std::string& method, const detail::input_args& in,
                       const std::string& form_expr, const std::string& symmetry,
                       std::uint64_t budget, const std::string& output, std::ostream& out) {
  const boolean_function f = detail::load_function(in);
  ai_certificate cert;
  if (method == "thm2") {
    cert = theorem2_certificate(f);
  } else if (method == "cor4") {
    const auto v = derive_value_vector(f);
    if (!v) fail(errc::not_symmetric, "cor4 requires a symmetric function");
    cert = corollary4_bound(*v);
  } else if (method == "coverage") {
    symmetry_mode mode;
    if (auto m = detail::parse_symmetry(symmetry))
      mode = *m;
    else if (is_symmetric(f))
      mode = symmetry_mode::symmetric;
    else if (is_rotation_symmetric(f))
      mode = symmetry_mode::rotation;
    else
      mode = symmetry_mode::generic;
    cert = coverage_certifier(f, mode, budget);
  } else if (method == "cor1") {
    if (form_expr.empty()) fail(errc::invalid_argument, "cor1 needs --form");
    const auto l = parse_affine_form(form_expr, f.num_vars());
    const auto r = corollary1_analyze(f, l, budget);
    cert = corollary1_certificate(r, f.num_vars());
  } else {
    fail(errc::invalid_argument, "unknown certify method: " + method);
  }
  if (output == "json")
    out << to_json(cert).dump(2) << '\n';
  else
    out << bound_method_name(cert.method) << ": AI >= " << cert.bound << '\n';
  return exit_ok;
}

/* ---- construct ------------------------------------------------------------ */

inline int run_construct(const std::string& family, int n, const std::string& k_csv, int i_param,
                         const std::string& parity, const std::string& completion,
                         const std::string& h_csv, const std::string& hp_csv,
                         std::uint64_t budget, const std::string& output_format,
                         const std::string& output, std::ostream& out) {
  json j;
  j["family"] = family;
  j["n"] = n;
  j["params"] = json::object();
  j["warnings"] = json::array();
  boolean_function f(1);

  if (family == "majority") {
    const auto v = majority_vector(n);
    f = symmetric_expand(v);
    j["value_vector"] = value_vector_to_string(v);
  } else if (family == "sigma-sum") {
    std::vector<int> k_set;
    for (const auto& tok : detail::split_list(k_csv)) k_set.push_back(std::stoi(tok));
    if (k_set.empty()) fail(errc::invalid_argument, "sigma-sum needs --k");
    const auto v = elementary_symmetric_sum(n, k_set);
    f = symmetric_expand(v);
    j["params"]["k"] = k_set;
    j["value_vector"] = value_vector_to_string(v);
    if (n == 15 && std::set<int>(k_set.begin(), k_set.end()) == std::set<int>{2, 4, 6, 10, 12, 14}) {
      const auto ref = parse_value_vector(detail::sigma15_reference_vector);
      std::vector<int> differs;
      for (int w = 0; w <= n; ++w)
        if (v.at(w) != ref.at(w)) differs.push_back(w);
      if (!differs.empty()) {
        const auto u_here = std::get<corollary4_evidence>(corollary4_bound(v).evidence).u_value;
        const auto u_ref = std::get<corollary4_evidence>(corollary4_bound(ref).evidence).u_value;
        j["warnings"].push_back(
            json{{"code", "value-vector-reference-mismatch"},
                 {"message", "the Lucas expansion differs from the commonly published value "
                             "vector for this parameter set; both yield the same U"},
                 {"positions", differs},
                 {"reference_vector", detail::sigma15_reference_vector},
                 {"U_computed", u_here},
                 {"U_reference", u_ref}});
      }
    }
  } else if (family == "example2") {
    if (i_param < 1) fail(errc::invalid_argument, "example2 needs --i");
    const auto v = swapped_weight_vector(n, i_param);
    f = symmetric_expand(v);
    j["params"]["i"] = i_param;
    j["value_vector"] = value_vector_to_string(v);
    // smallest positive t with C(ceil(n/2), i) + 1 < 2^t, and the implied bound
    const std::uint64_t c = binomial((n + 1) / 2, i_param);
    int t_param = 1;
    while ((std::uint64_t{1} << t_param) <= c + 1) ++t_param;
    j["params"]["t"] = t_param;
    j["params"]["claimed_bound"] = (n + 1) / 2 - t_param + 1;
    j["certificate"] = to_json(corollary4_bound(v));
  } else if (family == "corollary3") {
    parity_tail tail;
    if (parity == "odd")
      tail = parity_tail::odd_weights;
    else if (parity == "even")
      tail = parity_tail::even_weights;
    else
      fail(errc::invalid_argument, "corollary3 needs --parity odd|even");
    std::vector<std::uint8_t> low;
    for (char ch : completion) {
      if (ch != '0' && ch != '1') fail(errc::parse, "completion bits must be 0/1");
      low.push_back(ch == '1');
    }
    const auto v = corollary3_vector(n, tail, low);
    f = symmetric_expand(v);
    j["params"]["parity"] = parity;
    j["params"]["completion"] = completion;
    j["value_vector"] = value_vector_to_string(v);
    j["params"]["claim"] = "AI below the maximum ceil(n/2)";
  } else if (family == "orbit-swap") {
    const auto h = detail::parse_hex_list(h_csv);
    const auto hp = detail::parse_hex_list(hp_csv);
    auto [r, cert] = orbit_swap_certified(n, h, hp, budget);
    f = r.f;
    json swapped_out = json::array(), swapped_in = json::array();
    for (const auto& o : r.from_zeros)
      swapped_out.push_back(json{{"representative", o.representative}, {"size", o.size}});
    for (const auto& o : r.from_ones)
      swapped_in.push_back(json{{"representative", o.representative}, {"size", o.size}});
    j["params"]["H"] = swapped_out;
    j["params"]["H_prime"] = swapped_in;
    j["params"]["h_size"] = r.h_size;
    j["certificate"] = to_json(cert);
  } else if (family == "even-balanced") {
    auto r = nearest_balanced_even_variant(n);
    f = r.f;
    j["params"]["imbalance"] = r.imbalance;
    json ones = json::array();
    for (auto rep : r.ones_orbits) ones.push_back(rep);
    j["params"]["weight_half_ones_orbits"] = ones;
    if (r.imbalance != 0)
      j["warnings"].push_back(json{
          {"code", "imbalance"},
          {"message", "exact balance is not achievable with whole weight-n/2 orbits for this n"},
          {"imbalance", r.imbalance}});
  } else {
    fail(errc::invalid_argument, "unknown family: " + family);
  }

  j["function"] = detail::function_block(f, output_format);
  if (output == "json") {
    out << j.dump(2) << '\n';
  } else {
    out << detail::function_block_payload(f, output_format) << '\n';
    for (const auto& w : j["warnings"]) out << "warning: " << w["message"].get<std::string>() << '\n';
  }
  return exit_ok;
}

/* ---- scan ------------------------------------------------------------------ */

namespace detail {

struct scan_state {
  std::vector<std::string> checks;
  std::uint64_t examined = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> counterexamples;  // hex tables, first few

  void note_violation(const boolean_function& f) {
    ++violations;
    if (counterexamples.size() < 16) counterexamples.push_back(to_hex(f));
  }
};

inline void scan_one(const boolean_function& f, scan_state& st) {
  ++st.examined;
  std::optional<int> ai;  // computed at most once per function
  auto need_ai = [&]() {
    if (!ai) ai = exact_ai(f).ai;
    return *ai;
  };
  for (const auto& check : st.checks) {
    bool ok = true;
    if (check == "ai-oracle") {
      ok = need_ai() == oracle::exact_ai(f);
    } else if (check == "ai-upper") {
      ok = need_ai() <= (f.num_vars() + 1) / 2;
    } else if (check == "thm1-window") {
      for (int d = 0; d < need_ai() && ok; ++d) ok = weight_window_check(f, d);
    } else if (check == "nl-bound") {
      ok = nonlinearity(f) >= nl_bound_from_ai(f.num_vars(), need_ai());
    } else if (check == "thm2-sound") {
      const auto t2 = theorem2_degree_bound(f);
      const auto min_deg = min_annihilator_degree(f, f.num_vars());
      if (t2.unbounded)
        ok = !min_deg.has_value();
      else
        ok = min_deg.has_value() && min_deg->first >= t2.degree;
    } else if (check == "cor4-sound") {
      const auto v = derive_value_vector(f);
      if (!v) fail(errc::not_symmetric, "cor4-sound needs symmetric functions");
      ok = corollary4_bound(*v).bound <= need_ai();
    } else if (check == "coverage-sound") {
      symmetry_mode mode = is_symmetric(f) ? symmetry_mode::symmetric
                           : is_rotation_symmetric(f) ? symmetry_mode::rotation
                                                      : symmetry_mode::generic;
      ok = coverage_certifier(f, mode).bound <= need_ai();
    } else {
      fail(errc::invalid_argument, "unknown check: " + check);
    }
    if (!ok) {
      st.note_violation(f);
      return;
    }
  }
}

}  // namespace detail

inline int run_scan(const std::string& mode, int n, const std::string& checks_csv,
                    std::uint64_t count, std::uint64_t seed, const std::string& output,
                    std::ostream& out) {
  detail::scan_state st;
  st.checks = detail::split_list(checks_csv);
  if (st.checks.empty()) fail(errc::invalid_argument, "scan needs --check");

  if (mode == "exhaustive-n") {
    if (n < 1 || n > 4) fail(errc::invalid_argument, "exhaustive scans support n <= 4");
    for (std::uint64_t tt = 0; tt < (std::uint64_t{1} << (std::uint64_t{1} << n)); ++tt) {
      boolean_function f(n);
      f.words()[0] = tt;
      detail::scan_one(f, st);
    }
  } else if (mode == "symmetric-n") {
    if (n < 1 || n > 12) fail(errc::invalid_argument, "symmetric scans support n <= 12");
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << (n + 1)); ++bits) {
      std::vector<std::uint8_t> vb(n + 1);
      for (int i = 0; i <= n; ++i) vb[i] = (bits >> i) & 1;
      detail::scan_one(symmetric_expand(make_value_vector(n, vb)), st);
    }
  } else if (mode == "rsbf-n") {
    if (n < 1 || n > 10) fail(errc::invalid_argument, "rsbf scans support n <= 10");
    const auto orbits = orbit_representatives(n);
    std::mt19937_64 rng(seed);
    for (std::uint64_t k = 0; k < count; ++k) {
      rsbf_spec spec{n, {}};
      for (const auto& o : orbits) spec.assignment[o.representative] = rng() & 1;
      detail::scan_one(rsbf_expand(spec), st);
    }
  } else if (mode == "random") {
    if (n < 1 || n > 14) fail(errc::invalid_argument, "random scans support n <= 14");
    std::mt19937_64 rng(seed);
    for (std::uint64_t k = 0; k < count; ++k) detail::scan_one(random_function(n, rng), st);
  } else {
    fail(errc::invalid_argument, "unknown scan mode: " + mode);
  }

  if (output == "json") {
    json j{{"mode", mode},
           {"n", n},
           {"examined", st.examined},
           {"checks", st.checks},
           {"violations", st.violations},
           {"counterexamples", st.counterexamples}};
    out << j.dump(2) << '\n';
  } else {
    out << "examined " << st.examined << " functions, " << st.violations << " counterexamples\n";
    for (const auto& c : st.counterexamples) out << "  " << c << '\n';
  }
  return st.violations == 0 ? exit_ok : exit_invalid;
}

/* ---- entry point ------------------------------------------------------------ */

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"boolean function algebraic immunity toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output = "json";
  app.add_option("--output", output, "output mode: json|text")->default_val("json");
  std::uint64_t budget = default_work_budget;
  app.add_option("--budget", budget, "work budget for exact/coverage computations");

  // analyze
  detail::input_args an_in;
  std::vector<std::string> exact_ai_arg;
  std::string certify_csv, an_symmetry;
  auto* analyze_cmd = app.add_subcommand("analyze", "full report for one function");
  detail::add_input_options(analyze_cmd, an_in);
  analyze_cmd->add_option("--exact-ai", exact_ai_arg, "compute exact AI (optionally capped at d)")
      ->expected(0, 1);
  analyze_cmd->add_option("--certify", certify_csv, "lower-bound methods: thm2,cor4,coverage");
  analyze_cmd->add_option("--symmetry", an_symmetry, "coverage mode: auto|generic|symmetric|rotation");

  // certify
  detail::input_args ce_in;
  std::string ce_method, ce_form, ce_symmetry;
  auto* certify_cmd = app.add_subcommand("certify", "one lower-bound certificate");
  certify_cmd->add_option("method", ce_method, "thm2|cor4|coverage|cor1")->required();
  detail::add_input_options(certify_cmd, ce_in);
  certify_cmd->add_option("--form", ce_form, "affine form for cor1, e.g. \"x1+x2+1\"");
  certify_cmd->add_option("--symmetry", ce_symmetry, "coverage mode: auto|generic|symmetric|rotation");

  // construct
  std::string co_family, co_k, co_parity, co_completion, co_h, co_hp, co_format = "hex";
  int co_n = 0, co_i = 0;
  auto* construct_cmd = app.add_subcommand("construct", "build one of the function families");
  construct_cmd
      ->add_option("family", co_family,
                   "majority|sigma-sum|example2|corollary3|orbit-swap|even-balanced")
      ->required();
  construct_cmd->add_option("--n", co_n, "variable count")->required();
  construct_cmd->add_option("--k", co_k, "sigma-sum indices, e.g. 2,4,6");
  construct_cmd->add_option("--i", co_i, "example2 weight index");
  construct_cmd->add_option("--parity", co_parity, "corollary3 tail: odd|even");
  construct_cmd->add_option("--completion", co_completion, "corollary3 low-weight bits");
  construct_cmd->add_option("--h-orbits", co_h, "orbit-swap H representatives (hex, comma separated)");
  construct_cmd->add_option("--h-prime-orbits", co_hp, "orbit-swap H' representatives");
  construct_cmd->add_option("--output-format", co_format, "hex|anf|vector|orbits")
      ->default_val("hex");

  // scan
  std::string sc_mode, sc_checks;
  int sc_n = 0;
  std::uint64_t sc_count = 1000, sc_seed = 1;
  auto* scan_cmd = app.add_subcommand("scan", "sweep a function class against invariants");
  scan_cmd->add_option("mode", sc_mode, "exhaustive-n|symmetric-n|rsbf-n|random")->required();
  scan_cmd->add_option("n", sc_n, "variable count")->required();
  scan_cmd->add_option("--check", sc_checks,
                       "ai-oracle,ai-upper,thm1-window,nl-bound,thm2-sound,cor4-sound,coverage-sound");
  scan_cmd->add_option("--count", sc_count, "sample count for rsbf-n/random modes");
  scan_cmd->add_option("--seed", sc_seed, "PRNG seed for sampled modes");

  std::vector<std::string> argv_storage;
  argv_storage.push_back("bfai");
  for (const auto& a : args) argv_storage.push_back(a);
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return exit_ok;
    }
    err << e.what() << '\n';
    return exit_invalid;
  }

  try {
    if (*analyze_cmd)
      return run_analyze(an_in, exact_ai_arg, certify_csv, an_symmetry, budget, output, out);
    if (*certify_cmd)
      return run_certify(ce_method, ce_in, ce_form, ce_symmetry, budget, output, out);
    if (*construct_cmd)
      return run_construct(co_family, co_n, co_k, co_i, co_parity, co_completion, co_h, co_hp,
                           budget, co_format, output, out);
    if (*scan_cmd) return run_scan(sc_mode, sc_n, sc_checks, sc_count, sc_seed, output, out);
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == errc::cost_limit ? exit_cost : exit_invalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  }
  return exit_invalid;
}

}  // namespace bfai::cli
