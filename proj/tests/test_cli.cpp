#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "qtt/config.hpp"
#include "qtt/report.hpp"
#include "qtt/suites.hpp"

using namespace qtt;
using nlohmann::json;

TEST_SUITE("cli") {
  TEST_CASE("spin strings") {
    CHECK(parse_two_j("1/2") == 1);
    CHECK(parse_two_j("1") == 2);
    CHECK(parse_two_j("3/2") == 3);
    CHECK(format_spin(3) == "3/2");
    CHECK(format_spin(4) == "2");
    for (const char* bad : {"3/4", "x", "-1/2", "1.5", "", "1/2x"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_two_j(bad), ConfigError);
    }
  }

  TEST_CASE("chain configuration from JSON") {
    Sampler s(1);
    const json j = json::parse(R"({"q": [0.8, 0.3], "N": 2, "spins": ["1/2", "1"],
                                   "inhoms": [[1.1, 0.2], 0.9],
                                   "boundary": {"eps_plus": [1.0, 0.5], "k_bar_minus": 2.0}})");
    const ChainConfig c = chain_config_from_json(j, s);
    CHECK(c.two_js == std::vector<int>{1, 2});
    CHECK(c.q == cplx(0.8, 0.3));
    CHECK(c.inhoms[1] == cplx(0.9, 0.0));
    CHECK(c.boundary.left.eps_plus == cplx(1.0, 0.5));
    CHECK(c.boundary.right.k_minus == cplx(2.0, 0.0));
    // Missing entries are drawn from the seed, reproducibly.
    Sampler s2(1);
    CHECK(chain_config_from_json(j, s2).boundary.left.k_plus == c.boundary.left.k_plus);
    CHECK(chain_config_from_json(chain_config_to_json(c), s).boundary.right.eps_minus == c.boundary.right.eps_minus);
  }

  TEST_CASE("configuration errors") {
    Sampler s(1);
    auto bad = [&](const char* text) { return chain_config_from_json(json::parse(text), s); };
    CHECK_THROWS_AS(bad(R"({"spins": ["1/2", "3/4"]})"), ConfigError);
    CHECK_THROWS_AS(bad(R"({"spins": ["0"]})"), ConfigError);
    CHECK_THROWS_AS(bad(R"({"spins": [1]})"), ConfigError);
    CHECK_THROWS_AS(bad(R"({"N": 3, "spins": ["1/2"]})"), ConfigError);
    CHECK_THROWS_AS(bad(R"({"spins": ["1/2"], "inhoms": [1, 2]})"), ConfigError);
    CHECK_THROWS_AS(bad(R"({"spins": ["1/2"], "q": "big"})"), ConfigError);
    CHECK_THROWS_AS(bad(R"([1, 2])"), ConfigError);
    CHECK_THROWS_AS(load_chain_config("/nonexistent/config.json", s), ConfigError);
  }

  TEST_CASE("report ordering, verdicts and JSON") {
    Report r("demo");
    r.below("b case", 1e-12, 1e-9);
    r.above("a control", 1e-2, 1e-4);
    r.info("c info", 3.0);
    CHECK(r.passed());
    r.below("d failing", 1e-3, 1e-9);
    CHECK_FALSE(r.passed());
    CHECK(r.failures() == 1);
    r.error("e thrown", "boom");
    const json j = r.to_json();
    CHECK(j["suite"] == "demo");
    CHECK(j["pass"] == false);
    REQUIRE(j["cases"].size() == 5);
    CHECK(j["cases"][0]["case"] == "a control");
    CHECK(j["cases"][4]["case"] == "e thrown");
    CHECK(j["cases"][4]["pass"] == false);
    CHECK(r.summary().find("FAIL") != std::string::npos);
  }

  TEST_CASE("unknown suite and bad options") {
    CHECK_THROWS_AS(run_suite("nope", SuiteOptions{}), ConfigError);
    SuiteOptions o;
    o.max_two_j = 0;
    CHECK_THROWS_AS(run_suite("ybe", o), ConfigError);
    o = SuiteOptions{};
    o.symmetry_case = "sideways";
    CHECK_THROWS_AS(run_suite("symmetry", o), ConfigError);
  }

  TEST_CASE("every suite carries a negative control") {
    SuiteOptions o;
    o.max_two_j = 2;
    for (const auto& name : suite_names()) {
      CAPTURE(name);
      const Report r = run_suite(name, o);
      bool control = false;
      for (const auto& c : r.cases()) control = control || (c.expect == Expect::Above && c.pass);
      CHECK(control);
    }
  }

  TEST_CASE("suites expected to pass do pass") {
    SuiteOptions o;
    o.max_two_j = 2;
    for (const char* name : {"ybe", "regressions", "fusion-maps", "re", "dual-re", "normalization", "qdet", "tt",
                             "tsys", "aq-relations", "qonsager", "symmetry"}) {
      CAPTURE(name);
      const Report r = run_suite(name, o);
      CHECK(r.passed());
      CHECK(r.worst_below() < 1e-10);
    }
  }

  TEST_CASE("identical seeds give identical reports") {
    SuiteOptions o;
    o.seed = 99;
    const std::string a = run_suite("tt", o).to_json().dump();
    CHECK(a == run_suite("tt", o).to_json().dump());
    o.seed = 100;
    CHECK(a != run_suite("tt", o).to_json().dump());
  }

  TEST_CASE("a user chain replaces the seeded ones") {
    Sampler s(3);
    SuiteOptions o;
    o.chain = chain_config_from_json(json::parse(R"({"spins": ["1/2", "1"], "inhoms": [1.1, 0.9]})"), s);
    const Report r = run_suite("qdet", o);
    CHECK(r.passed());
    CHECK(r.to_json()["values"].size() == 1);
  }

  TEST_CASE("tolerance override applies to every identity") {
    SuiteOptions o;
    o.tol = 1e-30;
    CHECK_FALSE(run_suite("regressions", o).passed());
  }
}
