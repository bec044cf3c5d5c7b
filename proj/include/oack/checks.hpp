#ifndef OACK_CHECKS_HPP
#define OACK_CHECKS_HPP

#include "oack/common.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace oack {

struct CheckFailure {
  std::string where;
  std::string expected;
  std::string actual;
};

struct CheckReport {
  std::string suite;
  long cases = 0;
  std::vector<CheckFailure> failures;
  long long micros = 0; // wall time; excluded from serialized output
  bool ok() const { return failures.empty(); }
};

// trials / k_max / n_max of 0 mean the suite's own default, which matches
// the acceptance gate exactly.
struct CheckOptions {
  std::uint64_t seed = 0;
  int k_max = 0;
  int n_max = 0;
  int trials = 0;
  int cap = kDefaultCap;
};

// Property suites, in acceptance order; "core" and "norms" append module
// identities beyond the gate.
const std::vector<std::string>& suite_names();

CheckReport run_suite(const std::string& name, const CheckOptions& opts);

// name == "all" expands to every suite.
std::vector<CheckReport> run_suites(const std::string& name, const CheckOptions& opts);

} // namespace oack

#endif
