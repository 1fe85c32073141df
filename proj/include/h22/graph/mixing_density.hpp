#pragma once

#include "h22/graph/rooted_graph.hpp"

namespace h22::graph {

/// Root-pinned weighted Laplacian (N x N): off-diagonal -W_ij e^{t_i+t_j},
/// diagonal W_{i delta} e^{t_i} + sum_{j != i} W_ij e^{t_i+t_j}.
Eigen::MatrixXd laplacian(const RootedGraph& g, const Eigen::VectorXd& t);

/// Laplacian with weights W_ij e^{t_i+t_j} over the full configuration, with
/// the row and column of `pinned` removed. Any cofactor gives the tree sum.
Eigen::MatrixXd reduced_laplacian(const RootedGraph& g, const Eigen::VectorXd& t_full, Vertex pinned);

/// det laplacian(g, t); the matrix-tree polynomial with t_delta = 0.
double d_w_det(const RootedGraph& g, const Eigen::VectorXd& t);

/// ln D_W(t) over the full configuration, via a Cholesky factorization.
double log_d_w(const RootedGraph& g, const Eigen::VectorXd& t_full);

/// S_eff(t) = 1/2 sum_{i,j in V} W_ij (cosh(t_i - t_j) - 1) - 1/2 (ln D_W(t) - 2 sum_i t_i),
/// the double sum running over ordered pairs.
double effective_action(const RootedGraph& g, const Eigen::VectorXd& t);

/// log density of the t-field pinned at i0 (t_full[i0] must be 0), including
/// the (2 pi)^{-(|V|-1)/2} normalization.
double log_mixing_density(const RootedGraph& g, const Eigen::VectorXd& t_full, Vertex i0);

/// d/dW_e of log_mixing_density: -(cosh(t_a - t_b) - 1) + 1/2 d ln D_W / dW_e.
double dW_log_density(const RootedGraph& g, const Eigen::VectorXd& t_full, Vertex i0, Edge e);

/// |ln(e^{t_b} nu_delta(t)) - ln nu_b(t - t_b)|, with t_full[delta] = 0.
double reroot_residual(const RootedGraph& g, const Eigen::VectorXd& t_full, Vertex b);

}  // namespace h22::graph
