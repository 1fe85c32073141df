#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include "h22/integrate/probes.hpp"

namespace h22::integrate {

/// P(x, T) = T F(x / T) for T > 0 (PreconditionError otherwise).
double perspective(const JointProbe& f, const Eigen::VectorXd& x, double t);

/// Analytic Hessian of P in (x, T) from the Hessian of F.
Eigen::MatrixXd perspective_hessian(const JointProbe& f, const Eigen::VectorXd& x, double t);

/// Fourth-order finite-difference Hessian: Richardson extrapolation of the
/// central second-difference stencils at steps h and h / 2.
Eigen::MatrixXd fd_hessian(const std::function<double(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& z, double h);

struct PerspectiveReport {
  std::string probe;
  long samples = 0;
  long violations = 0;              // midpoint inequality broken beyond 1e-12 (1 + |rhs|)
  double max_excess = 0.0;          // largest (lhs - rhs) / (1 + |rhs|)
  double max_theta_residual = 0.0;  // theta-rewritten rhs vs rhs, same scaling
  long hessian_points = 0;
  double min_eigenvalue = 0.0;      // over finite-difference Hessians
  double max_hessian_error = 0.0;   // finite difference vs analytic, max-norm
  bool pass = false;
};

/// Random pairs in [-2, 2]^dim x [0.2, 3] with lambda in (0, 1), plus
/// finite-difference Hessians at `hessian_points` random points.
PerspectiveReport perspective_convexity_check(const JointProbe& f, int dim, long samples, std::uint64_t seed,
                                              int hessian_points = 200);

}  // namespace h22::integrate
