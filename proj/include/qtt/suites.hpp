#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtt/report.hpp"
#include "qtt/spinchain.hpp"

namespace qtt {

struct SuiteOptions {
  std::optional<ChainConfig> chain;  // replaces the seeded configurations where a suite takes one
  double tol = 0.0;                  // > 0 overrides every identity tolerance of the suite
  std::uint64_t seed = 20240611;
  int max_two_j = 3;                  // ybe, re, dual-re, fusion-maps
  std::string symmetry_case = "all";  // w0 | w1 | mixed | xxx | blob | all
};

// Negative controls must exceed this.
inline constexpr double kControlThreshold = 1e-4;

std::vector<std::string> suite_names();
// Throws ConfigError for an unknown suite name.
Report run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace qtt
