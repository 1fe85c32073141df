#include "h22/verify/run_all.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "h22/errors.hpp"
#include "h22/integrate/parallel.hpp"
#include "h22/verify/numeric_suites.hpp"

namespace h22::verify {

namespace {

using SuiteFn = std::function<std::vector<IdentityCheck>(const SuiteOptions&)>;

struct Entry {
  std::string name;
  SuiteFn run;
  bool exact;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {"algebra", algebra_suite, true},
      {"onepoint", onepoint_suite, true},
      {"fermionic_gaussian", fermionic_gaussian_suite, true},
      {"localization", localization_suite, true},
      {"ibp", ibp_suite, true},
      {"slepian", slepian_suite, true},
      {"switching", switching_suite, true},
      {"matrix_tree", matrix_tree_suite, false},
      {"partition", partition_suite, false},
      {"ward", ward_suite, false},
      {"monotonicity", monotonicity_suite, false},
      {"mcmc", mcmc_suite, false},
      {"rerooting", rerooting_suite, false},
      {"schur", schur_suite, false},
      {"twopoint", twopoint_suite, false},
      {"perspective", perspective_suite, false},
  };
  return entries;
}

const Entry& find(const std::string& name) {
  for (const auto& e : registry())
    if (e.name == name) return e;
  throw ConfigError("unknown suite '" + name + "'");
}

}  // namespace

std::size_t SuiteResult::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

std::size_t VerificationReport::check_count() const {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.checks.size();
  return n;
}

std::size_t VerificationReport::failure_count() const {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.failures();
  return n;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : registry()) v.push_back(e.name);
    return v;
  }();
  return names;
}

bool is_exact_suite(const std::string& name) { return find(name).exact; }

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  const auto& entry = find(name);
  SuiteResult r;
  r.suite = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.checks = entry.run(opt);
  } catch (const std::exception& e) {
    r.checks.push_back(predicate(name, "suite completed", "", "no exception", e.what(), false));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

VerificationReport run_all_suites(const VerifyConfig& cfg) {
  std::vector<std::string> selected;
  if (cfg.suites) {
    for (const auto& s : *cfg.suites) find(s);
    // Registry order, duplicates dropped.
    for (const auto& name : suite_names())
      if (std::find(cfg.suites->begin(), cfg.suites->end(), name) != cfg.suites->end()) selected.push_back(name);
  } else {
    selected = suite_names();
  }
  const SuiteOptions opt{cfg.seed, cfg.tamper_sign, cfg.threads};
  VerificationReport report;
  report.seed = cfg.seed;
  report.suites.resize(selected.size());
  integrate::parallel_for(selected.size(), cfg.threads,
                          [&](std::size_t i) { report.suites[i] = run_suite(selected[i], opt); });
  return report;
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json out;
  out["seed"] = report.seed;
  out["pass"] = report.pass();
  auto& summary = out["summary"] = nlohmann::ordered_json::array();
  auto& checks = out["checks"] = nlohmann::ordered_json::array();
  for (const auto& s : report.suites) {
    summary.push_back({{"suite", s.suite}, {"checks", s.checks.size()}, {"failures", s.failures()}, {"pass", s.pass()}});
    for (const auto& c : s.checks) {
      nlohmann::ordered_json j{{"suite", c.suite},         {"check", c.name},  {"inputs-digest", hex_digest(c.inputs)},
                               {"expected", c.expected},   {"got", c.got},     {"pass", c.pass}};
      if (c.exact)
        j["tolerance"] = "exact";
      else
        j["tolerance"] = c.tolerance;
      checks.push_back(std::move(j));
    }
  }
  return out;
}

}  // namespace h22::verify
