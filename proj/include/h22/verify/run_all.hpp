#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "h22/verify/algebra_suites.hpp"

namespace h22::verify {

struct VerifyConfig {
  std::uint64_t seed = SuiteOptions{}.seed;
  std::optional<std::vector<std::string>> suites;  // nullopt: every suite; empty: none
  bool tamper_sign = false;
  int threads = 0;
};

struct SuiteResult {
  std::string suite;
  std::vector<IdentityCheck> checks;
  double seconds = 0.0;  // wall time, kept out of the JSON report
  std::size_t failures() const;
  bool pass() const { return failures() == 0; }
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;
  std::size_t check_count() const;
  std::size_t failure_count() const;
  bool pass() const { return failure_count() == 0; }
};

/// Registered suites in report order.
const std::vector<std::string>& suite_names();
/// Suites whose checks are exact symbolic identities.
bool is_exact_suite(const std::string& name);

/// Runs one suite. An exception escaping the suite becomes a failing check, so
/// a broken battery never aborts the run. ConfigError for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

/// Validates the selection (ConfigError on unknown names), then runs the
/// suites concurrently and reports them in registry order.
VerificationReport run_all_suites(const VerifyConfig& cfg);

/// {seed, pass, summary: [{suite, checks, failures, pass}],
///  checks: [{suite, check, inputs-digest, expected, got, pass, tolerance}]}
nlohmann::ordered_json to_json(const VerificationReport& report);

}  // namespace h22::verify
