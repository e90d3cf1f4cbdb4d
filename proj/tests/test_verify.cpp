#include <doctest.h>

#include "gapkit/verify.hpp"

using namespace gapkit;

TEST_CASE("suite registry") {
  CHECK(kSuiteNames.size() == 14);
  CHECK(run_suite("no-such-suite", SuiteConfig{}).exit_code == 2);
}

TEST_CASE("quick suites pass with zero mismatches") {
  SuiteConfig cfg;
  cfg.trials = 10;
  cfg.seed = 5;
  for (const char* name : {"roundtrip", "claim1", "setcover", "cb", "lin3-vc",
                           "minsat", "subexp-approx", "grouping-alpha"}) {
    SuiteResult res = run_suite(name, cfg);
    INFO(std::string(name));
    CHECK(res.exit_code == 0);
    CHECK(res.mismatches == 0);
  }
}

TEST_CASE("fixed-shape suites pass") {
  SuiteConfig cfg;
  SuiteResult powering = run_suite("powering", cfg);
  CHECK(powering.exit_code == 0);
  SuiteResult ds = run_suite("ds-gadget", SuiteConfig{20, 1, 0, 300});
  CHECK(ds.exit_code == 0);
}

TEST_CASE("reports are byte-identical across runs") {
  SuiteConfig cfg;
  cfg.trials = 5;
  cfg.seed = 123;
  for (const char* name : {"roundtrip", "claim1", "lin3-vc", "oracles-exhaustive"}) {
    SuiteResult first = run_suite(name, cfg);
    SuiteResult second = run_suite(name, cfg);
    INFO(std::string(name));
    CHECK(first.report_json == second.report_json);
    CHECK(first.exit_code == 0);
  }
}

TEST_CASE("different seeds give different trial streams") {
  SuiteConfig a{5, 1, 0, 300};
  SuiteConfig b{5, 2, 0, 300};
  CHECK(run_suite("roundtrip", a).report_json !=
        run_suite("roundtrip", b).report_json);
}

TEST_CASE("timeout produces exit code 3 and a partial report") {
  SuiteConfig cfg;
  cfg.trials = 500;
  cfg.seed = 1;
  cfg.timeout_s = 0.0;  // expire immediately
  SuiteResult res = run_suite("theorem3-sandwich", cfg);
  CHECK(res.exit_code == 3);
  CHECK(res.report_json.find("\"timed_out\": true") != std::string::npos);
}
