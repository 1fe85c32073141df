#pragma once

#include <functional>
#include <string>
#include <vector>

namespace h22::integrate {

struct TwoPointResult {
  double w = 0.0;
  double beta_side = 0.0;  // integral of g(p_d + p_1 W / (2 beta_1)) against q
  double t_side = 0.0;     // integral of g(p_d + p_1 e^t) against the N = 1 density
  double residual = 0.0;
};

/// Both sides by adaptive Gauss-Kronrod; the beta side on beta_1 = v^2,
/// beta_delta = W^2 / (4 v^2) + u^2. PreconditionError for W <= 0,
/// AccuracyError when an error estimate exceeds 1e-9.
TwoPointResult twopoint_law_check(double w, const std::function<double(double)>& g, double p_delta, double p_1);

struct TwoPointProbe {
  std::string name;
  std::function<double(double)> g;
  double p_delta = 0.0;
  double p_1 = 1.0;
};

/// Five convex probes with fixed (p_delta, p_1).
std::vector<TwoPointProbe> twopoint_probe_bank();

struct TwoPointScan {
  std::string probe;
  std::vector<TwoPointResult> points;
  double max_residual = 0.0;
  double max_increase = 0.0;  // largest beta_side(W_{k+1}) - beta_side(W_k)
  bool pass = false;
};

/// Residual <= residual_tol at every W and the beta side non-increasing up to `slack`.
TwoPointScan twopoint_scan(const TwoPointProbe& probe, const std::vector<double>& w_grid, double residual_tol = 1e-6,
                           double slack = 1e-6);

}  // namespace h22::integrate
