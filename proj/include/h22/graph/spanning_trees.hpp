#pragma once

#include <utility>
#include <vector>

#include "h22/graph/rooted_graph.hpp"

namespace h22::graph {

struct SpanningTree {
  std::vector<Edge> edges;
};

/// Every spanning tree of the complete graph on n_total labelled vertices,
/// each exactly once (Pruefer decoding). 2 <= n_total <= 8.
std::vector<SpanningTree> enumerate_spanning_trees(int n_total);

/// sum over spanning trees T of prod_{(ij) in T} W_ij exp(t_i + t_j), for the
/// full configuration t over V (the root entry included).
double d_w_trees_full(const RootedGraph& g, const Eigen::VectorXd& t_full);

/// Same with t_delta = 0.
double d_w_trees(const RootedGraph& g, const Eigen::VectorXd& t);

}  // namespace h22::graph
