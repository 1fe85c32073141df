#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "h22/integrate/mcmc.hpp"
#include "h22/integrate/quadrature.hpp"

namespace h22::cli {

/// Everything a subcommand needs. Defaults are the values used when neither
/// the config file nor a flag sets a key; see docs/config.md.
struct RunConfig {
  std::uint64_t seed = 20240601;
  std::optional<std::vector<std::string>> suites;  // nullopt: command default; empty: none
  bool tamper_sign = false;

  std::optional<std::filesystem::path> graph;  // graph file; otherwise the uniform graph below
  int uniform_n = 1;
  double uniform_w = 1.0;

  std::vector<double> w_grid{0.5, 0.75, 1.0, 1.5, 2.0, 3.0};
  std::vector<std::string> edges;  // edge names such as 1-d or 1-2; empty: all
  std::string probe = "default";
  std::string backend = "quad";  // quad | mcmc
  integrate::QuadratureSpec quad;
  integrate::ChainSpec chain;
  double tolerance = 1e-8;
  double agreement = 1e-6;
  int threads = 0;

  std::filesystem::path out = "h22-out";
  bool expect_violations = false;
  std::optional<std::filesystem::path> input;  // export-plotdata source
};

/// Parses `key = value` lines ('#' comments). Unknown keys, duplicates and
/// malformed values throw ConfigError naming the line and key. Relative paths
/// are resolved against `base`.
RunConfig parse_config(std::string_view text, const std::filesystem::path& base = {});
RunConfig load_config(const std::filesystem::path& path);

/// Checks cross-field constraints (grid values, chain spec, backend name).
void validate(const RunConfig& cfg);

/// Every result-affecting key in a fixed order, one `key = value` per line.
/// The output directory and thread count are left out.
std::string canonical_text(const RunConfig& cfg);
std::string config_digest(const RunConfig& cfg);

}  // namespace h22::cli
