#pragma once

#include "h22/graph/rooted_graph.hpp"

namespace h22::graph {

/// H_beta(i, i) = 2 beta_i, H_beta(i, j) = -W_ij; beta has one entry per vertex
/// (root last). Positive definiteness is not checked here.
Eigen::MatrixXd build_H_beta(const RootedGraph& g, const Eigen::VectorXd& beta);

bool is_positive_definite(const Eigen::MatrixXd& h);

/// Reduction of H_beta onto the boundary pair {N, delta} with bulk {1..N-1}.
struct SchurReduction {
  double w_tilde = 0.0;          // W_{N delta} + [H21 H11^{-1} H12]_{N delta}
  Eigen::MatrixXd m;             // -H11^{-1} H12, columns (N, delta)
  double alpha_n = 0.0;
  double alpha_delta = 0.0;
  double p_tilde_n = 0.0;
  double p_tilde_delta = 0.0;
  Eigen::Matrix2d schur_complement;  // H22 - H21 H11^{-1} H12 = (G^{V2,V2})^{-1}
};

/// `p` has one coefficient per vertex (root last). Throws LinearAlgebraError
/// when the bulk block is singular.
SchurReduction schur_reduce(const RootedGraph& g, const Eigen::VectorXd& beta, const Eigen::VectorXd& p);

/// sum_j p_j G(j, delta) / G(delta, delta) with G = H^{-1}.
double green_ratio(const Eigen::MatrixXd& h, const Eigen::VectorXd& p);

/// p~_delta + p~_N G22(N, delta) / G22(delta, delta), G22 the inverse Schur complement.
double collapsed_ratio(const SchurReduction& red);

/// Two-point beta density: (2/pi) e^W e^{-beta1 - betad} / sqrt(4 beta1 betad - W^2)
/// on {beta1 > 0, 4 beta1 betad > W^2}, zero elsewhere.
double q_density_2pt(double w, double beta1, double betad);

/// The same density at (beta1, W^2 / (4 beta1) + s), s > 0, where the
/// determinant is exactly 4 beta1 s; avoids the cancellation in 4 beta1 betad - W^2.
double q_density_2pt_shifted(double w, double beta1, double s);

}  // namespace h22::graph
