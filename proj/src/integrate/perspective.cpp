#include "h22/integrate/perspective.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "h22/errors.hpp"

namespace h22::integrate {

double perspective(const JointProbe& f, const Eigen::VectorXd& x, double t) {
  if (!(t > 0.0)) throw PreconditionError("perspective needs T > 0");
  return t * f.eval(x / t);
}

Eigen::MatrixXd perspective_hessian(const JointProbe& f, const Eigen::VectorXd& x, double t) {
  if (!(t > 0.0)) throw PreconditionError("perspective needs T > 0");
  const Eigen::Index n = x.size();
  const Eigen::VectorXd z = x / t;
  const Eigen::MatrixXd h = f.hessian(z);
  Eigen::MatrixXd out(n + 1, n + 1);
  out.topLeftCorner(n, n) = h / t;
  out.topRightCorner(n, 1) = -h * z / t;
  out.bottomLeftCorner(1, n) = out.topRightCorner(n, 1).transpose();
  out(n, n) = z.dot(h * z) / t;
  return out;
}

namespace {

Eigen::MatrixXd second_order_hessian(const std::function<double(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& z,
                                     double h) {
  const Eigen::Index n = z.size();
  Eigen::MatrixXd out(n, n);
  const double f0 = f(z);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::VectorXd p = z, m = z;
    p(i) += h;
    m(i) -= h;
    out(i, i) = (f(p) - 2.0 * f0 + f(m)) / (h * h);
    for (Eigen::Index j = 0; j < i; ++j) {
      Eigen::VectorXd pp = z, pm = z, mp = z, mm = z;
      pp(i) += h, pp(j) += h;
      pm(i) += h, pm(j) -= h;
      mp(i) -= h, mp(j) += h;
      mm(i) -= h, mm(j) -= h;
      out(i, j) = out(j, i) = (f(pp) - f(pm) - f(mp) + f(mm)) / (4.0 * h * h);
    }
  }
  return out;
}

}  // namespace

Eigen::MatrixXd fd_hessian(const std::function<double(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& z, double h) {
  return (4.0 * second_order_hessian(f, z, 0.5 * h) - second_order_hessian(f, z, h)) / 3.0;
}

PerspectiveReport perspective_convexity_check(const JointProbe& f, int dim, long samples, std::uint64_t seed,
                                              int hessian_points) {
  if (dim < 1) throw PreconditionError("dimension must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-2.0, 2.0), scale(0.2, 3.0), mix(0.0, 1.0);
  auto vec = [&] {
    Eigen::VectorXd v(dim);
    for (int k = 0; k < dim; ++k) v(k) = coord(rng);
    return v;
  };

  PerspectiveReport rep;
  rep.probe = f.name;
  rep.samples = samples;
  rep.max_excess = -INFINITY;
  for (long s = 0; s < samples; ++s) {
    const Eigen::VectorXd x = vec(), y = vec();
    const double tx = scale(rng), ty = scale(rng);
    double lambda = mix(rng);
    if (lambda == 0.0) lambda = 0.5;
    const double tm = lambda * tx + (1.0 - lambda) * ty;
    const double lhs = perspective(f, lambda * x + (1.0 - lambda) * y, tm);
    const double rhs = lambda * perspective(f, x, tx) + (1.0 - lambda) * perspective(f, y, ty);
    const double theta = lambda * tx / tm;
    const double via_theta = tm * (theta * f.eval(x / tx) + (1.0 - theta) * f.eval(y / ty));
    const double scale_rhs = 1.0 + std::abs(rhs);
    const double excess = (lhs - rhs) / scale_rhs;
    rep.max_excess = std::max(rep.max_excess, excess);
    rep.max_theta_residual = std::max(rep.max_theta_residual, std::abs(via_theta - rhs) / scale_rhs);
    if (excess > 1e-12) ++rep.violations;
  }

  rep.hessian_points = hessian_points;
  rep.min_eigenvalue = INFINITY;
  auto p_of = [&](const Eigen::VectorXd& z) { return perspective(f, z.head(dim), z(dim)); };
  for (int k = 0; k < hessian_points; ++k) {
    Eigen::VectorXd z(dim + 1);
    z.head(dim) = vec();
    z(dim) = 0.5 + scale(rng);
    const Eigen::MatrixXd h = fd_hessian(p_of, z, 1e-2);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h, Eigen::EigenvaluesOnly);
    rep.min_eigenvalue = std::min(rep.min_eigenvalue, eig.eigenvalues().minCoeff());
    const Eigen::MatrixXd exact = perspective_hessian(f, z.head(dim), z(dim));
    rep.max_hessian_error = std::max(rep.max_hessian_error, (h - exact).cwiseAbs().maxCoeff());
  }
  if (hessian_points == 0) rep.min_eigenvalue = 0.0;
  rep.pass = rep.violations == 0 && rep.max_theta_residual <= 1e-12 && rep.min_eigenvalue >= -1e-8;
  return rep;
}

}  // namespace h22::integrate
