#include "h22/graph/rooted_graph.hpp"

#include <cmath>

#include "h22/errors.hpp"

namespace h22::graph {

namespace {

bool support_connected(const Eigen::MatrixXd& w) {
  const auto m = static_cast<std::size_t>(w.rows());
  std::vector<bool> seen(m, false);
  std::vector<std::size_t> stack{m - 1};
  seen[m - 1] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (std::size_t u = 0; u < m; ++u) {
      if (u == v || seen[u] || w(v, u) <= 0.0) continue;
      seen[u] = true;
      ++count;
      stack.push_back(u);
    }
  }
  return count == m;
}

}  // namespace

RootedGraph::RootedGraph(Eigen::MatrixXd weights) : n_(static_cast<int>(weights.rows()) - 1), w_(std::move(weights)) {
  if (w_.rows() != w_.cols()) throw PreconditionError("weight matrix must be square");
  if (n_ < 1) throw SizeError("a rooted graph needs at least one non-root vertex");
  for (Eigen::Index i = 0; i < w_.rows(); ++i) {
    w_(i, i) = 0.0;
    for (Eigen::Index j = 0; j < i; ++j) {
      double a = w_(i, j), b = w_(j, i);
      if (!std::isfinite(a) || a < 0.0) throw PreconditionError("edge weights must be finite and nonnegative");
      if (a != b) throw PreconditionError("weight matrix must be symmetric");
    }
  }
  if (!support_connected(w_)) throw PreconditionError("the support of the weights is not connected");
}

RootedGraph RootedGraph::uniform(int n, double w) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(n + 1, n + 1, w);
  return RootedGraph(std::move(m));
}

RootedGraph RootedGraph::with_weight(Edge e, double w) const {
  Eigen::MatrixXd m = w_;
  m(e.a, e.b) = w;
  m(e.b, e.a) = w;
  return RootedGraph(std::move(m));
}

std::string RootedGraph::vertex_name(Vertex v) const { return is_root(v) ? "d" : std::to_string(v + 1); }

std::string RootedGraph::edge_name(Edge e) const { return vertex_name(e.a) + "-" + vertex_name(e.b); }

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw PreconditionError("an edge needs two distinct vertices");
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::vector<Edge> all_edges(const RootedGraph& g) {
  std::vector<Edge> out;
  for (Vertex a = 0; a < static_cast<Vertex>(g.vertex_count()); ++a)
    for (Vertex b = a + 1; b < static_cast<Vertex>(g.vertex_count()); ++b) out.push_back({a, b});
  return out;
}

bool is_boundary(const RootedGraph& g, Edge e) { return g.is_root(e.a) || g.is_root(e.b); }

std::vector<Edge> boundary_edges(const RootedGraph& g) {
  std::vector<Edge> out;
  for (auto e : all_edges(g))
    if (is_boundary(g, e)) out.push_back(e);
  return out;
}

std::vector<Edge> bulk_edges(const RootedGraph& g) {
  std::vector<Edge> out;
  for (auto e : all_edges(g))
    if (!is_boundary(g, e)) out.push_back(e);
  return out;
}

Eigen::VectorXd with_root(const Eigen::VectorXd& t) {
  Eigen::VectorXd full(t.size() + 1);
  full.head(t.size()) = t;
  full(t.size()) = 0.0;
  return full;
}

}  // namespace h22::graph
