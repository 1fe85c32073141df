#include "h22/graph/mixing_density.hpp"

#include <cmath>
#include <numbers>

#include "h22/errors.hpp"

namespace h22::graph {

namespace {

void require_full(const RootedGraph& g, const Eigen::VectorXd& t_full) {
  if (t_full.size() != g.vertex_count()) throw PreconditionError("t must cover every vertex including the root");
  for (Eigen::Index i = 0; i < t_full.size(); ++i)
    if (!std::isfinite(t_full(i))) throw PreconditionError("t must be finite");
}

void require_pin(const Eigen::VectorXd& t_full, Vertex i0) {
  if (t_full(static_cast<Eigen::Index>(i0)) != 0.0) throw PreconditionError("the pinned coordinate must be exactly 0");
}

// Position of vertex v in the reduced matrix with `pinned` removed.
Eigen::Index reduced_index(Vertex v, Vertex pinned) {
  return static_cast<Eigen::Index>(v < pinned ? v : v - 1);
}

double cosh_energy(const RootedGraph& g, const Eigen::VectorXd& t_full) {
  // Ordered-pair double sum with the 1/2 prefactor: one term per unordered pair.
  double s = 0.0;
  for (Eigen::Index i = 0; i < t_full.size(); ++i)
    for (Eigen::Index j = i + 1; j < t_full.size(); ++j) s += g.weights()(i, j) * (std::cosh(t_full(i) - t_full(j)) - 1.0);
  return s;
}

Eigen::LLT<Eigen::MatrixXd> factor(const Eigen::MatrixXd& l) {
  Eigen::LLT<Eigen::MatrixXd> llt(l);
  if (llt.info() != Eigen::Success) throw LinearAlgebraError("weighted Laplacian is not positive definite");
  return llt;
}

using LVec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
using LMat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

long double log_density_extended(const RootedGraph& g, const LVec& t, Vertex i0) {
  const Eigen::Index m = t.size();
  long double energy = 0.0L;
  LMat l = LMat::Zero(m - 1, m - 1);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      if (i == j) continue;
      const long double w = g.weights()(i, j);
      if (j > i) energy += w * (std::cosh(t(i) - t(j)) - 1.0L);
      if (static_cast<Vertex>(i) == i0) continue;
      const long double lw = w * std::exp(t(i) + t(j));
      auto ri = reduced_index(i, i0);
      l(ri, ri) += lw;
      if (static_cast<Vertex>(j) != i0) l(ri, reduced_index(j, i0)) -= lw;
    }
  }
  Eigen::LLT<LMat> llt(l);
  if (llt.info() != Eigen::Success) throw LinearAlgebraError("weighted Laplacian is not positive definite");
  long double logdet = 0.0L;
  for (Eigen::Index i = 0; i < m - 1; ++i) logdet += 2.0L * std::log(llt.matrixLLT()(i, i));
  return -energy + 0.5L * logdet - t.sum() - 0.5L * (m - 1) * std::log(2.0L * std::numbers::pi_v<long double>);
}

}  // namespace

Eigen::MatrixXd reduced_laplacian(const RootedGraph& g, const Eigen::VectorXd& t_full, Vertex pinned) {
  require_full(g, t_full);
  const int m = g.vertex_count();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(m - 1, m - 1);
  for (Vertex i = 0; i < static_cast<Vertex>(m); ++i) {
    if (i == pinned) continue;
    auto ri = reduced_index(i, pinned);
    for (Vertex j = 0; j < static_cast<Vertex>(m); ++j) {
      if (j == i) continue;
      double w = g.weight(i, j) * std::exp(t_full(i) + t_full(j));
      l(ri, ri) += w;
      if (j != pinned) l(ri, reduced_index(j, pinned)) -= w;
    }
  }
  return l;
}

Eigen::MatrixXd laplacian(const RootedGraph& g, const Eigen::VectorXd& t) {
  if (t.size() != g.n()) throw PreconditionError("t must have one entry per non-root vertex");
  return reduced_laplacian(g, with_root(t), g.root());
}

double d_w_det(const RootedGraph& g, const Eigen::VectorXd& t) { return laplacian(g, t).determinant(); }

double log_d_w(const RootedGraph& g, const Eigen::VectorXd& t_full) {
  auto llt = factor(reduced_laplacian(g, t_full, g.root()));
  const Eigen::MatrixXd& lmat = llt.matrixLLT();
  double s = 0.0;
  for (Eigen::Index i = 0; i < lmat.rows(); ++i) s += std::log(lmat(i, i));
  return 2.0 * s;
}

double effective_action(const RootedGraph& g, const Eigen::VectorXd& t) {
  auto full = with_root(t);
  require_full(g, full);
  return cosh_energy(g, full) - 0.5 * (log_d_w(g, full) - 2.0 * t.sum());
}

double log_mixing_density(const RootedGraph& g, const Eigen::VectorXd& t_full, Vertex i0) {
  require_full(g, t_full);
  require_pin(t_full, i0);
  const double free_coords = g.vertex_count() - 1;
  // t_full[i0] = 0, so summing over every vertex equals summing over i != i0.
  return -cosh_energy(g, t_full) + 0.5 * log_d_w(g, t_full) - t_full.sum() -
         0.5 * free_coords * std::log(2.0 * std::numbers::pi);
}

double dW_log_density(const RootedGraph& g, const Eigen::VectorXd& t_full, Vertex i0, Edge e) {
  require_full(g, t_full);
  require_pin(t_full, i0);
  auto llt = factor(reduced_laplacian(g, t_full, i0));
  const Eigen::MatrixXd green = llt.solve(Eigen::MatrixXd::Identity(g.n(), g.n()));
  const double w = std::exp(t_full(e.a) + t_full(e.b));
  double dlog;
  if (e.a == i0 || e.b == i0) {
    Vertex other = e.a == i0 ? e.b : e.a;
    auto k = reduced_index(other, i0);
    dlog = w * green(k, k);
  } else {
    auto ka = reduced_index(e.a, i0), kb = reduced_index(e.b, i0);
    dlog = w * (green(ka, ka) + green(kb, kb) - 2.0 * green(ka, kb));
  }
  return -(std::cosh(t_full(e.a) - t_full(e.b)) - 1.0) + 0.5 * dlog;
}

double reroot_residual(const RootedGraph& g, const Eigen::VectorXd& t_full, Vertex b) {
  const Vertex delta = g.root();
  require_full(g, t_full);
  require_pin(t_full, delta);
  if (b == delta) return 0.0;
  // Both sides in extended precision: the shift t - t_b is not exact in double
  // and W sinh(t_i - t_j) amplifies that rounding past the residual target.
  using Vec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  const Vec t = t_full.cast<long double>();
  const long double lhs = t(b) - t(delta) + log_density_extended(g, t, delta);
  Vec shifted = t.array() - t(b);
  shifted(b) = 0.0L;
  const long double rhs = log_density_extended(g, shifted, b);
  return static_cast<double>(std::abs(lhs - rhs));
}

}  // namespace h22::graph
