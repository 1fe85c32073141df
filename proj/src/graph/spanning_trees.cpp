#include "h22/graph/spanning_trees.hpp"

#include <cmath>

#include "h22/errors.hpp"

namespace h22::graph {

namespace {

SpanningTree decode_pruefer(const std::vector<int>& seq, int n) {
  std::vector<int> degree(n, 1);
  for (int v : seq) ++degree[v];
  SpanningTree tree;
  for (int v : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        tree.edges.push_back(make_edge(leaf, v));
        --degree[leaf];
        --degree[v];
        break;
      }
    }
  }
  int u = -1;
  for (int k = 0; k < n; ++k) {
    if (degree[k] == 1) {
      if (u < 0) {
        u = k;
      } else {
        tree.edges.push_back(make_edge(u, k));
        break;
      }
    }
  }
  return tree;
}

}  // namespace

std::vector<SpanningTree> enumerate_spanning_trees(int n_total) {
  if (n_total < 2 || n_total > 8) throw SizeError("spanning tree enumeration needs 2 <= vertices <= 8");
  const int len = n_total - 2;
  std::vector<SpanningTree> out;
  std::vector<int> seq(len, 0);
  while (true) {
    out.push_back(decode_pruefer(seq, n_total));
    int k = len - 1;
    while (k >= 0 && seq[k] == n_total - 1) seq[k--] = 0;
    if (k < 0) break;
    ++seq[k];
  }
  return out;
}

double d_w_trees_full(const RootedGraph& g, const Eigen::VectorXd& t_full) {
  if (t_full.size() != g.vertex_count()) throw PreconditionError("t must cover every vertex");
  double sum = 0.0;
  for (const auto& tree : enumerate_spanning_trees(g.vertex_count())) {
    double prod = 1.0;
    for (auto e : tree.edges) prod *= g.weight(e) * std::exp(t_full(e.a) + t_full(e.b));
    sum += prod;
  }
  return sum;
}

double d_w_trees(const RootedGraph& g, const Eigen::VectorXd& t) { return d_w_trees_full(g, with_root(t)); }

}  // namespace h22::graph
