#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace h22::graph {

/// Vertex index: 0..N-1 are the bulk sites 1..N, N is the root delta.
using Vertex = std::size_t;

struct Edge {
  Vertex a;
  Vertex b;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted complete graph on {1..N, delta}. Weights are symmetric and
/// nonnegative, the diagonal is ignored, and the support must be connected.
class RootedGraph {
 public:
  explicit RootedGraph(Eigen::MatrixXd weights);
  static RootedGraph uniform(int n, double w);

  int n() const { return n_; }
  int vertex_count() const { return n_ + 1; }
  Vertex root() const { return static_cast<Vertex>(n_); }
  bool is_root(Vertex v) const { return v == root(); }

  double weight(Vertex i, Vertex j) const { return w_(i, j); }
  double weight(Edge e) const { return w_(e.a, e.b); }
  const Eigen::MatrixXd& weights() const { return w_; }

  /// Copy with W_e replaced (validated like the constructor).
  RootedGraph with_weight(Edge e, double w) const;

  std::string vertex_name(Vertex v) const;
  std::string edge_name(Edge e) const;

 private:
  int n_;
  Eigen::MatrixXd w_;
};

/// Canonical orientation a < b.
Edge make_edge(Vertex a, Vertex b);
std::vector<Edge> all_edges(const RootedGraph& g);
std::vector<Edge> boundary_edges(const RootedGraph& g);
std::vector<Edge> bulk_edges(const RootedGraph& g);
bool is_boundary(const RootedGraph& g, Edge e);

/// (t_1, ..., t_N) -> (t_1, ..., t_N, t_delta = 0).
Eigen::VectorXd with_root(const Eigen::VectorXd& t);

}  // namespace h22::graph
