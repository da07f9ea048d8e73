#include <catch2/catch_amalgamated.hpp>

#include "qas/spec_io.hpp"

#include <fstream>
#include <sstream>

using namespace qas;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kRoot = QAS_SOURCE_DIR;

}  // namespace

TEST_CASE("the shipped worked-example file parses to the expected data") {
  InputSpec spec = parse_spec(slurp(kRoot + "/data/example3.json"));
  CHECK(spec.b.n == 3);
  CHECK(spec.b.m == 2);
  CHECK(spec.b.L[0] == IntMatrix::from_rows({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}));
  CHECK(spec.b.L[1] == IntMatrix::from_rows({{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}));
  REQUIRE(spec.mu.size() == 2);
  CHECK_FALSE(spec.mu[0].symbolic);
  CHECK(spec.mu[0].value == 1);
  CHECK(spec.mu[1].symbolic);
  CHECK(spec.mu[1].name == "alpha");
  CHECK(std::holds_alternative<FMonomial>(spec.f[0]));
  CHECK(std::holds_alternative<FLinear>(spec.f[1]));

  // identical to the built-in
  CHECK(parse_spec(example3_text()).echo == spec.echo);
}

TEST_CASE("parse errors carry field diagnostics") {
  CHECK_THROWS_AS(parse_spec(""), SpecError);
  CHECK_THROWS_WITH(parse_spec("{\"n\": 2}"),
                    Catch::Matchers::ContainsSubstring("one of \"L\" or \"r\""));
  CHECK_THROWS_WITH(
      parse_spec("{\"n\": 1, \"L\": [[[0]]], \"r\": [[0]]}"),
      Catch::Matchers::ContainsSubstring("mutually exclusive"));
  CHECK_THROWS_WITH(parse_spec("{\"n\": 2, \"L\": [[[0, 1], [1, 0]]]}"),
                    Catch::Matchers::ContainsSubstring("not antisymmetric"));
  CHECK_THROWS_WITH(parse_spec("{\"n\": 2, \"L\": [[[0, 1], [-1, 0]]], \"mu\": [1, 2]}"),
                    Catch::Matchers::ContainsSubstring("mu"));
  CHECK_THROWS_WITH(parse_spec("{\"n\": 2, \"r\": [[0, 0], [0, 0]]}"),
                    Catch::Matchers::ContainsSubstring("nonzero"));
  CHECK_THROWS_WITH(
      parse_spec("{\"n\": 2, \"L\": [[[0, 1], [-1, 0]]], \"f\": [\"cubic\"]}"),
      Catch::Matchers::ContainsSubstring("f"));
  CHECK_THROWS_WITH(parse_spec("{\"n\": 2, \"L\": [[[0, 0.5], [-0.5, 0]]]}"),
                    Catch::Matchers::ContainsSubstring("expected an integer"));
  CHECK_THROWS_WITH(parse_spec("{\"n\": 2, \"L\": [[[0, 1], [-1, 0]]], \"m\": 2}"),
                    Catch::Matchers::ContainsSubstring("does not match"));
}

TEST_CASE("sigma-encoded input and uniparameter input") {
  InputSpec even = parse_spec(
      "{\"n\": 2, \"encodes\": \"sigma\", \"L\": [[[0, 4], [-4, 0]]]}");
  CHECK(even.b.L[0] == IntMatrix::from_rows({{0, 2}, {-2, 0}}));
  CHECK_FALSE(even.sigma_rebased);

  InputSpec odd = parse_spec(
      "{\"n\": 2, \"encodes\": \"sigma\", \"L\": [[[0, 3], [-3, 0]]]}");
  CHECK(odd.sigma_rebased);
  CHECK(odd.parameter_names[0] == "sqrt_lambda1");

  InputSpec uni = parse_spec(slurp(kRoot + "/data/uniparameter.json"));
  CHECK(uni.uniparameter);
  CHECK(uni.b.m == 1);
  REQUIRE(uni.f.size() == 1);
  const FMonomial* mo = std::get_if<FMonomial>(&uni.f[0]);
  REQUIRE(mo != nullptr);
  CHECK(mo->r == 1);
  CHECK_FALSE(uni.mu[0].symbolic);
  CHECK(uni.mu[0].value == 1);
}

TEST_CASE("analyze report fields") {
  InputSpec spec = parse_spec(example3_text());
  Json a = run_analyze(spec);
  CHECK(a["command"] == "analyze");
  CHECK(a["rank_vector"] == Json::array({0, 2, 0, 1, 0, 1, 1, 0}));
  CHECK(a["strata"][1]["ideal_family"] ==
        Json::array({"x1", "x2 - t1", "x3 - t2"}));
  CHECK(a["strata"][0]["singleton"] == true);
}

TEST_CASE("limit report matches the worked example") {
  InputSpec spec = parse_spec(example3_text());
  Json l = run_limit(spec);
  CHECK(l["f"] == Json::array({"z", "1 - alpha + z*alpha"}));
  CHECK(l["poisson_matrix"] ==
        Json::array({Json::array({"0", "2", "2*alpha"}),
                     Json::array({"-2", "0", "0"}),
                     Json::array({"-2*alpha", "0", "0"})}));
  CHECK(l["qtilde"][0][1] == "z^2");
  CHECK(l["qtilde"][0][2] == "(1 - alpha + z*alpha)^2");
  CHECK(l["generator_check"]["passed"] == 9);
}

TEST_CASE("verify command is deterministic per seed and passes") {
  InputSpec spec = parse_spec(example3_text());
  VerifyResult a = run_verify(spec, 200, 7, 3);
  CHECK(a.pass);
  for (const auto& c : a.report["checks"])
    CHECK(c["passed"] == c["total"]);
  VerifyResult b = run_verify(spec, 200, 7, 3);
  CHECK(a.report.dump() == b.report.dump());
  // limit_pairs covers the whole degree-3 box
  CHECK(a.report["checks"][1]["name"] == "limit_pairs");
  CHECK(a.report["checks"][1]["total"] == 64 * 64);
}

TEST_CASE("toric commands") {
  InputSpec spec = parse_spec(slurp(kRoot + "/data/toric.json"));
  Json p = run_toric_pullback(spec);
  CHECK(p["pullback_L"][0] ==
        Json::array({Json::array({0, 1, 1}), Json::array({-1, 0, -1}),
                     Json::array({-1, 1, 0})}));
  ToricCheckResult c = run_toric_check(spec, 4);
  CHECK(c.pass);
  CHECK(c.report["monomials_checked"] == 35);

  InputSpec no_toric = parse_spec(example3_text());
  CHECK_THROWS_AS(run_toric_pullback(no_toric), SpecError);
}

TEST_CASE("example3 reproduces the golden report byte for byte") {
  std::string golden = slurp(kRoot + "/tests/golden/example3.json");
  CHECK(run_example3().dump(2) + "\n" == golden);
}

TEST_CASE("hasse DOT export via the run layer") {
  InputSpec spec = parse_spec(example3_text());
  std::string dot = run_hasse(spec);
  CHECK(dot.find("\"w_010\" -> \"w_111\";") != std::string::npos);
  CHECK(dot == run_hasse(spec));
}
