#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace h22::integrate {

/// f: R -> R with its first two derivatives.
struct ScalarFunction {
  std::string name;
  std::function<double(double)> eval, d1, d2;
};

/// f(sum_k p_k x_k) with x = e^t.
struct ConvexProbe {
  ScalarFunction f;
  Eigen::VectorXd p;
};

/// F: R^N -> R evaluated at x = e^t, with an analytic Hessian.
struct JointProbe {
  std::string name;
  std::function<double(const Eigen::VectorXd&)> eval;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> hessian;
};

/// Uniform handle used by the scans: F(x) with x = e^t, plus the expected sign
/// of dK/dW (convex probes must be non-increasing).
struct Probe {
  std::string name;
  std::function<double(std::span<const double> x)> eval;
  bool convex = true;
};

/// linear, square, shifted-square, exp-tenth, softplus, sqrt1p (fixed order).
std::vector<ScalarFunction> convex_scalar_bank();
/// f(u) = -u^2, used to show the scan detects violations.
ScalarFunction nonconvex_demo();

/// Fixed mixed-sign combination coefficients (1, -1/2, 3/4, 1/4, -3/10, 3/5) truncated to n.
Eigen::VectorXd default_coefficients(int n);

/// log-sum-exp and a positive semidefinite quadratic form on R^n.
std::vector<JointProbe> joint_bank(int n);
/// Random convex quadratic x^T B B^T x + b.x with entries drawn from `seed`.
JointProbe random_convex_quadratic(int n, unsigned long long seed);

Probe as_probe(const ConvexProbe& c);
Probe as_probe(const JointProbe& j);

/// Default scan bank: every convex scalar probe with default_coefficients(n),
/// then the joint bank.
std::vector<Probe> default_probe_bank(int n);
/// Bank selection by name: "default", "nonconvex-demo", or a single probe name.
std::vector<Probe> select_probes(const std::string& name, int n);

struct ProbeConsistency {
  double min_d2 = 0.0;
  double max_d1_error = 0.0;
  double max_d2_error = 0.0;
};

/// Samples [lo, hi]: minimum of f'' and the worst central-difference mismatch
/// of f' and f'' (relative to max(1, |value|)).
ProbeConsistency check_scalar_function(const ScalarFunction& f, double lo, double hi, int samples);

}  // namespace h22::integrate
