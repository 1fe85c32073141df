#include "h22/graph/schrodinger.hpp"

#include <cmath>
#include <numbers>

#include "h22/errors.hpp"

namespace h22::graph {

Eigen::MatrixXd build_H_beta(const RootedGraph& g, const Eigen::VectorXd& beta) {
  if (beta.size() != g.vertex_count()) throw PreconditionError("beta needs one entry per vertex");
  Eigen::MatrixXd h = -g.weights();
  h.diagonal() = 2.0 * beta;
  return h;
}

bool is_positive_definite(const Eigen::MatrixXd& h) {
  Eigen::LLT<Eigen::MatrixXd> llt(h);
  return llt.info() == Eigen::Success;
}

SchurReduction schur_reduce(const RootedGraph& g, const Eigen::VectorXd& beta, const Eigen::VectorXd& p) {
  if (p.size() != g.vertex_count()) throw PreconditionError("p needs one entry per vertex");
  const Eigen::MatrixXd h = build_H_beta(g, beta);
  const Eigen::Index nb = g.n() - 1;  // bulk V1 = {1..N-1}
  const Eigen::Index n_idx = g.n() - 1, d_idx = g.n();

  SchurReduction red;
  const Eigen::Matrix2d h22 = h.bottomRightCorner(2, 2);
  if (nb == 0) {
    red.w_tilde = g.weight(n_idx, d_idx);
    red.m = Eigen::MatrixXd::Zero(0, 2);
    red.schur_complement = h22;
  } else {
    const Eigen::MatrixXd h11 = h.topLeftCorner(nb, nb);
    const Eigen::MatrixXd h12 = h.topRightCorner(nb, 2);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(h11);
    if (!lu.isInvertible()) throw LinearAlgebraError("bulk block of H_beta is singular");
    const Eigen::MatrixXd sol = lu.solve(h12);  // H11^{-1} H12
    const Eigen::Matrix2d coupling = h12.transpose() * sol;
    red.w_tilde = g.weight(n_idx, d_idx) + coupling(0, 1);
    red.m = -sol;
    red.schur_complement = h22 - coupling;
    const Eigen::RowVector2d alpha = p.head(nb).transpose() * red.m;
    red.alpha_n = alpha(0);
    red.alpha_delta = alpha(1);
  }
  red.p_tilde_n = red.alpha_n + p(n_idx);
  red.p_tilde_delta = red.alpha_delta + p(d_idx);
  return red;
}

double green_ratio(const Eigen::MatrixXd& h, const Eigen::VectorXd& p) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(h);
  if (!lu.isInvertible()) throw LinearAlgebraError("H_beta is singular");
  Eigen::VectorXd e = Eigen::VectorXd::Zero(h.rows());
  e(h.rows() - 1) = 1.0;
  const Eigen::VectorXd g_col = lu.solve(e);  // G(., delta)
  return p.dot(g_col) / g_col(h.rows() - 1);
}

double collapsed_ratio(const SchurReduction& red) {
  const Eigen::Matrix2d g22 = red.schur_complement.inverse();
  return red.p_tilde_delta + red.p_tilde_n * g22(0, 1) / g22(1, 1);
}

double q_density_2pt(double w, double beta1, double betad) {
  const double det = 4.0 * beta1 * betad - w * w;
  if (!(beta1 > 0.0) || !(det > 0.0)) return 0.0;
  return (2.0 / std::numbers::pi) * std::exp(w - beta1 - betad) / std::sqrt(det);
}

double q_density_2pt_shifted(double w, double beta1, double s) {
  if (!(beta1 > 0.0) || !(s > 0.0)) return 0.0;
  const double betad = w * w / (4.0 * beta1) + s;
  return (2.0 / std::numbers::pi) * std::exp(w - beta1 - betad) / std::sqrt(4.0 * beta1 * s);
}

}  // namespace h22::graph
