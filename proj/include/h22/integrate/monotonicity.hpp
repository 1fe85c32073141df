#pragma once

#include <string>
#include <vector>

#include "h22/graph/rooted_graph.hpp"
#include "h22/integrate/derivative.hpp"

namespace h22::integrate {

struct ScanSpec {
  std::vector<double> w_grid{0.5, 0.75, 1.0, 1.5, 2.0, 3.0};
  std::vector<graph::Edge> edges;  // empty: every edge
  QuadratureSpec quad;
  double tolerance = 1e-8;
  double agreement = 1e-6;  // |score - finite difference| bound
  int threads = 0;
};

/// One (graph, edge, probe) curve. `error` is |score - finite_diff| per grid
/// point; pass means both estimates stay <= tolerance everywhere and agree.
struct MonotonicityReport {
  std::string graph_id;
  graph::Edge edge{};
  std::string edge_name;
  std::string probe;
  bool convex = true;
  std::vector<double> w_grid, k, score, finite_diff, error;
  double max_violation = 0.0;  // largest positive estimate, 0 if none
  bool agree = true;
  bool pass = true;
};

/// Quadrature scan (N <= 3). The varied edge takes each grid value while all
/// other weights stay as in g. Failures are recorded, never thrown.
std::vector<MonotonicityReport> monotonicity_scan(const graph::RootedGraph& g, const std::string& graph_id,
                                                  const std::vector<Probe>& probes, const ScanSpec& spec);

}  // namespace h22::integrate
