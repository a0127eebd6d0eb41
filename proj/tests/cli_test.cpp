#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bfai/cli.hpp"

using nlohmann::json;

namespace {

struct cli_run {
  int exit_code;
  std::string out;
  std::string err;
};

cli_run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = bfai::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* kExample3Anf =
    "x1*x2*x3+x2*x3*x4+x3*x4*x5+x4*x5*x6+x5*x6*x1+x6*x1*x2"
    "+x1*x4+x2*x5+x3*x6+x1*x3*x5+x2*x4*x6"
    "+x1*x2*x3*x4+x2*x3*x4*x5+x3*x4*x6*x1"
    "+x1*x2*x3*x4*x5+x2*x3*x4*x5*x6+x3*x4*x5*x6*x1+x4*x5*x6*x1*x2+x5*x6*x1*x2*x3"
    "+x6*x1*x2*x3*x4";

}  // namespace

TEST_CASE("analyze reports the corollary-4 certificate for the 15-variable vector") {
  const auto r = run({"analyze", "0011111100000011", "--format", "vector", "--certify", "cor4"});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["n"] == 15);
  CHECK(j["weight"] == 16384);
  CHECK(j["balanced"] == true);
  CHECK(j["symmetric"] == true);
  CHECK(!j.contains("ai_exact"));
  REQUIRE(j["ai_lower_bounds"].size() == 1);
  const auto& cert = j["ai_lower_bounds"][0];
  CHECK(cert["method"] == "COROLLARY4");
  CHECK(cert["bound"] == 5);
  CHECK(cert["evidence"]["U"] == 246);
}

TEST_CASE("analyze fixed report keys") {
  const auto r = run({"analyze", "8", "--format", "hex"});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  const std::vector<std::string> expected{"ai_lower_bounds", "balanced",  "degree",
                                          "delta",           "n",         "nonlinearity",
                                          "pc_order",        "rotation_symmetric",
                                          "symmetric",       "weight"};
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == expected);
}

TEST_CASE("analyze exact ai") {
  const auto r = run({"analyze", "1100", "--format", "vector", "--exact-ai"});
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.out)["ai_exact"] == 2);

  const auto zero = run({"analyze", "00", "--format", "hex", "--n", "3", "--exact-ai",
                         "--certify", "thm2,cor4,coverage"});
  REQUIRE(zero.exit_code == 0);
  const json jz = json::parse(zero.out);
  CHECK(jz["ai_exact"] == 0);
  for (const auto& c : jz["ai_lower_bounds"]) CHECK(c["bound"] == 0);

  // capped search below the true value leaves the field out
  const auto capped = run({"analyze", "1100", "--format", "vector", "--exact-ai=1"});
  REQUIRE(capped.exit_code == 0);
  CHECK(!json::parse(capped.out).contains("ai_exact"));

  const auto degenerate = run({"--budget", "10", "analyze", "1100", "--format", "vector",
                               "--exact-ai"});
  REQUIRE(degenerate.exit_code == 0);
  CHECK(!json::parse(degenerate.out).contains("ai_exact"));
}

TEST_CASE("analyze detects the non-rotation-symmetric printed function") {
  const auto r = run({"analyze", kExample3Anf, "--format", "anf", "--n", "6"});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["rotation_symmetric"] == false);
  CHECK(j["symmetric"] == false);
}

TEST_CASE("exit codes: 1 for bad input, 2 for a tripped budget") {
  CHECK(run({"analyze", "0Z", "--format", "hex"}).exit_code == 1);
  CHECK(run({"analyze", "8", "--format", "nope"}).exit_code == 1);
  CHECK(run({"certify", "cor4", "2", "--format", "hex"}).exit_code == 1);  // not symmetric
  CHECK(run({"nosuchcommand"}).exit_code == 1);
  const auto costly = run({"--budget", "4", "certify", "coverage", "111000", "--format", "vector"});
  CHECK(costly.exit_code == 2);
  // the same budget trip through analyze --certify is also a required computation
  CHECK(run({"--budget", "4", "analyze", "111000", "--format", "vector", "--certify", "coverage"})
            .exit_code == 2);
}

TEST_CASE("certify subcommand") {
  const auto cor4 = run({"certify", "cor4", "0011111100000011", "--format", "vector"});
  REQUIRE(cor4.exit_code == 0);
  CHECK(json::parse(cor4.out)["bound"] == 5);

  const auto thm2 = run({"certify", "thm2", "111000", "--format", "vector"});
  REQUIRE(thm2.exit_code == 0);
  const json jt = json::parse(thm2.out);
  CHECK(jt["bound"] == 0);
  CHECK(jt["evidence"]["note"] == "vacuous for balanced input");

  const auto cov = run({"certify", "coverage", "111000", "--format", "vector"});
  REQUIRE(cov.exit_code == 0);
  CHECK(json::parse(cov.out)["bound"] == 3);

  const auto cor1 = run({"certify", "cor1", "111000", "--format", "vector", "--form",
                         "x1+x2+x3+x4+x5"});
  REQUIRE(cor1.exit_code == 0);
  const json j1 = json::parse(cor1.out);
  CHECK(j1["method"] == "COROLLARY1");
  CHECK(j1["evidence"].contains("outcome"));
}

TEST_CASE("construct majority") {
  const auto r = run({"construct", "majority", "--n", "7", "--output-format", "vector"});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["value_vector"] == "11110000");
  CHECK(j["function"]["payload"] == "11110000");
  CHECK(j["warnings"].empty());

  CHECK(run({"construct", "majority", "--n", "6"}).exit_code == 1);
}

TEST_CASE("construct sigma-sum surfaces the reference-vector warning") {
  const auto r = run({"construct", "sigma-sum", "--n", "15", "--k", "2,4,6,10,12,14",
                      "--output-format", "vector"});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["value_vector"] == "0011111100000000");
  REQUIRE(j["warnings"].size() == 1);
  const auto& w = j["warnings"][0];
  CHECK(w["code"] == "value-vector-reference-mismatch");
  CHECK(w["positions"] == json::array({14, 15}));
  CHECK(w["U_computed"] == 246);
  CHECK(w["U_reference"] == 246);

  // other parameter sets warn about nothing
  const auto quiet = run({"construct", "sigma-sum", "--n", "5", "--k", "1"});
  REQUIRE(quiet.exit_code == 0);
  CHECK(json::parse(quiet.out)["warnings"].empty());
}

TEST_CASE("construct example2 and corollary3") {
  const auto e2 = run({"construct", "example2", "--n", "9", "--i", "2", "--output-format",
                       "vector"});
  REQUIRE(e2.exit_code == 0);
  const json j2 = json::parse(e2.out);
  CHECK(j2["value_vector"] == "0101100100");
  CHECK(j2["params"]["t"] == 4);
  CHECK(j2["certificate"]["method"] == "COROLLARY4");

  const auto c3 = run({"construct", "corollary3", "--n", "5", "--parity", "odd", "--completion",
                       "00", "--output-format", "vector"});
  REQUIRE(c3.exit_code == 0);
  CHECK(json::parse(c3.out)["value_vector"] == "000101");
}

TEST_CASE("construct orbit-swap") {
  const auto r = run({"construct", "orbit-swap", "--n", "9", "--h-orbits", "1F", "--h-prime-orbits", "F",
                      "--output-format", "orbits"});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["params"]["h_size"] == 9);
  CHECK(j["certificate"]["method"] == "COROLLARY5");
  CHECK(j["certificate"]["bound"] == 2);
  const auto f = bfai::rsbf_expand(
      bfai::parse_orbit_file(j["function"]["payload"].get<std::string>(), 9));
  CHECK(f.balanced());
}

TEST_CASE("construct even-balanced") {
  const auto r = run({"construct", "even-balanced", "--n", "6"});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["params"]["imbalance"] == 2);
  REQUIRE(j["warnings"].size() == 1);
  CHECK(j["warnings"][0]["code"] == "imbalance");
}

TEST_CASE("scan modes") {
  const auto r = run({"scan", "exhaustive-n", "3", "--check", "ai-oracle,ai-upper,thm1-window"});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["examined"] == 256);
  CHECK(j["violations"] == 0);

  const auto sym = run({"scan", "symmetric-n", "8", "--check", "cor4-sound,coverage-sound"});
  REQUIRE(sym.exit_code == 0);
  CHECK(json::parse(sym.out)["violations"] == 0);

  const auto rsbf =
      run({"scan", "rsbf-n", "6", "--check", "thm2-sound,nl-bound", "--count", "50", "--seed", "9"});
  REQUIRE(rsbf.exit_code == 0);
  CHECK(json::parse(rsbf.out)["examined"] == 50);

  CHECK(run({"scan", "exhaustive-n", "5", "--check", "ai-upper"}).exit_code == 1);
  CHECK(run({"scan", "symmetric-n", "13", "--check", "ai-upper"}).exit_code == 1);
  CHECK(run({"scan", "rsbf-n", "11", "--check", "ai-upper"}).exit_code == 1);
  CHECK(run({"scan", "exhaustive-n", "2", "--check", "nosuch"}).exit_code == 1);
  CHECK(run({"scan", "exhaustive-n", "2"}).exit_code == 1);
}

TEST_CASE("identical invocations produce byte-identical reports") {
  const std::vector<std::string> args{"analyze", "0011111100000011", "--format", "vector",
                                      "--certify", "cor4,coverage,thm2"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  const std::vector<std::string> scan_args{"scan", "rsbf-n", "6", "--check", "ai-upper",
                                           "--count", "30", "--seed", "7"};
  CHECK(run(scan_args).out == run(scan_args).out);
}

TEST_CASE("text output mode") {
  const auto r = run({"--output", "text", "analyze", "1100", "--format", "vector", "--exact-ai"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("exact AI:           2") != std::string::npos);
  CHECK(r.out.find("witness:            ") != std::string::npos);
  const auto c = run({"--output", "text", "construct", "majority", "--n", "7", "--output-format",
                      "vector"});
  CHECK(c.out == "11110000\n");
}

TEST_CASE("reported bounds never exceed the exact value") {
  const auto r = run({"analyze", "111000", "--format", "vector", "--exact-ai", "--certify",
                      "thm2,cor4,coverage"});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.contains("ai_exact"));
  for (const auto& c : j["ai_lower_bounds"]) CHECK(c["bound"] <= j["ai_exact"]);
}

TEST_CASE("golden reports stay stable") {
  const struct {
    const char* file;
    std::vector<std::string> args;
  } cases[] = {
      {"analyze_sigma15.json",
       {"analyze", "0011111100000011", "--format", "vector", "--certify", "cor4,coverage,thm2"}},
      {"analyze_printed_rsbf.json", {"analyze", kExample3Anf, "--format", "anf", "--n", "6"}},
      {"construct_majority7.json",
       {"construct", "majority", "--n", "7", "--output-format", "vector"}},
      {"construct_example2_n9_i2.json",
       {"construct", "example2", "--n", "9", "--i", "2", "--output-format", "vector"}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.file);
    const auto r = run(c.args);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == read_file(std::string(BFAI_GOLDEN_DIR) + "/" + c.file));
  }
}
