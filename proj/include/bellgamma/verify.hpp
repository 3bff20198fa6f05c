// Named verification suites run by `bellgamma verify`.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace bellgamma {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  std::optional<unsigned> a;      ///< restrict to one a (default: the suite's own list)
  std::optional<unsigned> n_max;  ///< upper end of the n range
};

/// lemma1, recurrences, integrality, bernoulli, bell, tail, saddle.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opt);

}  // namespace bellgamma
