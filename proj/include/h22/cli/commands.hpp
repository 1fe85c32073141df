#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "h22/cli/config.hpp"
#include "h22/graph/rooted_graph.hpp"

namespace h22::cli {

/// Process exit codes shared by every subcommand.
enum Exit : int { ok = 0, check_failed = 1, usage_error = 2, size_error = 3, file_error = 4, internal_error = 5 };

/// The graph file when set, otherwise the uniform graph; `id` names it in reports.
graph::RootedGraph resolve_graph(const RunConfig& cfg, std::string* id = nullptr);
/// Edge names (1-d, 1-2, ...) to edges; ConfigError for unknown names.
std::vector<graph::Edge> resolve_edges(const graph::RootedGraph& g, const std::vector<std::string>& names);

/// Exact batteries (every exact suite unless `suites` is set). Writes
/// susy_check.json; returns check_failed iff a selected check fails.
int cmd_susy_check(const RunConfig& cfg, std::ostream& log);

/// dK/dW per (edge, probe, W) with the quadrature (N <= 3) or MCMC (N <= 6)
/// backend. Writes mono_scan.csv. Exit 0 iff every row passes, or with
/// expect_violations, iff at least one row is flagged.
int cmd_mono_scan(const RunConfig& cfg, std::ostream& log);

/// Partition, Ward, rerooting, Schur and two-point batteries. Writes
/// partition_reroot_reduce.json and residuals.csv.
int cmd_partition_reroot_reduce(const RunConfig& cfg, std::ostream& log);

/// Long-format K and dK/dW curves from a mono_scan.csv. Writes plotdata.csv.
int cmd_export_plotdata(const RunConfig& cfg, std::ostream& log);

}  // namespace h22::cli
