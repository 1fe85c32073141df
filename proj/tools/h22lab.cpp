#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "h22/cli/commands.hpp"
#include "h22/errors.hpp"

namespace {

struct Flags {
  std::string config;
  std::vector<std::string> suites;
  std::optional<std::uint64_t> seed;
  std::string out;
  bool expect_violations = false;
  std::string probe;
  std::string graph;
};

h22::cli::RunConfig build_config(const Flags& f) {
  auto cfg = f.config.empty() ? h22::cli::RunConfig{} : h22::cli::load_config(f.config);
  if (!f.suites.empty()) cfg.suites = f.suites;
  if (f.seed) cfg.seed = *f.seed;
  if (!f.out.empty()) cfg.out = f.out;
  if (f.expect_violations) cfg.expect_violations = true;
  if (!f.probe.empty()) cfg.probe = f.probe;
  if (!f.graph.empty()) cfg.graph = f.graph;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"h22lab: checks for the H^{2|2} model and its graph-monotonicity theorems"};
  app.require_subcommand(1);
  Flags flags;

  using Command = int (*)(const h22::cli::RunConfig&, std::ostream&);
  Command selected = nullptr;
  auto add = [&](const char* name, const char* help, Command cmd) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", flags.config, "key = value config file (docs/config.md)");
    sub->add_option("--suite", flags.suites, "restrict to the named suite (repeatable)");
    sub->add_option("--seed", flags.seed, "random seed");
    sub->add_option("--out", flags.out, "output directory");
    sub->add_flag("--expect-violations", flags.expect_violations, "succeed only if a violation is flagged");
    sub->add_option("--probe", flags.probe, "probe bank: default, nonconvex-demo or a probe name");
    sub->add_option("--graph", flags.graph, "graph file (docs/graph_format.md)");
    sub->callback([&selected, cmd] { selected = cmd; });
  };
  add("susy-check", "exact symbolic batteries", h22::cli::cmd_susy_check);
  add("mono-scan", "dK/dW sign scan over edges, probes and a W grid", h22::cli::cmd_mono_scan);
  add("partition-reroot-reduce", "partition, Ward, rerooting, Schur and two-point checks",
      h22::cli::cmd_partition_reroot_reduce);
  add("export-plotdata", "long-format curves from a mono-scan CSV", h22::cli::cmd_export_plotdata);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? h22::cli::ok : h22::cli::usage_error;
  }

  try {
    return selected(build_config(flags), std::cout);
  } catch (const h22::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return h22::cli::usage_error;
  } catch (const h22::SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return h22::cli::size_error;
  } catch (const h22::FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return h22::cli::file_error;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return h22::cli::internal_error;
  }
}
