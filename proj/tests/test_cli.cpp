#include <doctest.h>

#include <cstdlib>

#include "char1/paf.hpp"
#include "cli_golden.hpp"

using namespace char1;

TEST_CASE("golden CLI cases") {
  const Json cases = golden::load_cases();
  REQUIRE(cases.size() > 0);
  for (const auto& c : cases) {
    CAPTURE(c["name"].get<std::string>());
    CHECK(golden::check_case(c) == "");
  }
}

TEST_CASE("every verb has a golden case") {
  const Json cases = golden::load_cases();
  for (const char* verb : {"paf-eval", "paf-oplus", "paf-norm", "paf-clamp", "paf-plot", "poly-minkowski",
                           "poly-hull-union", "poly-support", "poly-rnorm", "poly-polar", "spec-attain",
                           "spec-classify", "cong-qnorm", "cong-minrep", "cong-zariski", "val-kink",
                           "val-convexity", "val-circle-check"}) {
    CAPTURE(verb);
    bool found = false;
    for (const auto& c : cases) found = found || c["verb"] == verb;
    CHECK(found);
  }
}

TEST_CASE("laws-run semifield with seed 7") {
  const golden::Invocation r = golden::invoke({"laws-run", "semifield", "--seed", "7", "--cases", "50"}, "");
  REQUIRE(r.status == 0);
  const Json report = parse_json(r.out);
  CHECK(report["passed"] == true);
  CHECK(report["seed"] == 7);
  CHECK(report["cases"].get<std::size_t>() > 0);
  CHECK(report["failures"] == 0);
}

TEST_CASE("laws-run reports failures with exit 3 and a counterexample") {
  const golden::Invocation r = golden::invoke({"laws-run", "fnorm", "--seed", "7", "--cases", "200"}, "");
  CHECK(r.status == 3);
  const Json report = parse_json(r.out);
  CHECK(report["passed"] == false);
  bool has_example = false;
  for (const auto& l : report["laws"]) has_example = has_example || l.contains("first_counterexample");
  CHECK(has_example);
}

TEST_CASE("laws-run rejects unknown suites") {
  CHECK(golden::invoke({"laws-run", "nope"}, "").status == 1);
  CHECK(golden::invoke({"laws-run"}, "").status == 1);
}

TEST_CASE("seed override from the environment") {
  ::setenv("CHAR1_SEED", "123", 1);
  const golden::Invocation r = golden::invoke({"laws-run", "decomposition", "--seed", "7", "--cases", "5"}, "");
  ::unsetenv("CHAR1_SEED");
  REQUIRE(r.status == 0);
  CHECK(parse_json(r.out)["seed"] == 123);
}

TEST_CASE("bad flags and bad JSON exit 1") {
  CHECK(golden::invoke({"paf-eval", "--no-such-flag"}, "{}").status == 1);
  CHECK(golden::invoke({"paf-eval"}, "{not json").status == 1);
  CHECK(golden::invoke({"paf-eval"}, "[]").status == 1);
}

TEST_CASE("precondition violations exit 2 and name the condition") {
  const std::string f = R"({"domain":["0","1"],"breakpoints":["0","1"],"pieces":[{"a":"1","b":"0"}]})";
  const golden::Invocation r = golden::invoke({"paf-eval"}, R"({"f":)" + f + R"(,"t":"2"})");
  CHECK(r.status == 2);
  CHECK(r.err.find("precondition violated") != std::string::npos);
  CHECK(golden::invoke({"paf-plot", "--samples", "1"}, R"({"f":)" + f + "}").status == 2);
  CHECK(golden::invoke({"paf-clamp"}, R"({"f":)" + f + R"(,"c":"-1"})").status == 2);
}

TEST_CASE("verb output equals the direct library call") {
  const Paf f = Paf::interpolate({0, Rat(1, 3), 1}, {Rat(-1, 2), 2, 0});
  const Paf g = Paf::affine(0, 1, -3, 1);
  const Json in{{"f", to_json(f)}, {"g", to_json(g)}};
  const golden::Invocation r = golden::invoke({"paf-oplus"}, in.dump());
  REQUIRE(r.status == 0);
  CHECK(paf_from_json(parse_json(r.out)["result"]) == oplus(f, g));
}

TEST_CASE("input and output files") {
  const std::string dir = CHAR1_TEST_TMP;
  {
    std::ofstream in(dir + "/cli_in.json");
    in << R"({"A":{"vertices":[["0","0"],["1","0"],["1","1"],["0","1"]]},"psi":["1","1"]})";
  }
  const golden::Invocation r =
      golden::invoke({"poly-support", "--input", dir + "/cli_in.json", "--output", dir + "/cli_out.json"}, "");
  REQUIRE(r.status == 0);
  std::ifstream out(dir + "/cli_out.json");
  std::stringstream buf;
  buf << out.rdbuf();
  CHECK(buf.str() == "{\"value\":\"2\"}\n");
  CHECK(golden::invoke({"poly-support", "--input", dir + "/missing.json"}, "").status == 1);
}
