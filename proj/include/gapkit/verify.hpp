#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gapkit {

struct SuiteConfig {
  int trials = 0;  // 0 = suite default
  std::uint64_t seed = 1;
  int max_n = 0;           // 0 = suite default
  double timeout_s = 300;  // per-suite wall clock budget
};

/// Exit codes: 0 zero mismatches, 1 mismatches, 2 unknown suite, 3 timeout
/// (partial report). The report is a single JSON document; identical
/// (suite, seed, config) produce byte-identical reports.
struct SuiteResult {
  int exit_code = 0;
  int mismatches = 0;
  std::string report_json;
};

extern const std::vector<std::string> kSuiteNames;

SuiteResult run_suite(const std::string& suite, const SuiteConfig& config);

}  // namespace gapkit
