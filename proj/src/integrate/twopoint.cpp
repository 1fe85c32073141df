#include "h22/integrate/twopoint.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "h22/errors.hpp"
#include "h22/graph/schrodinger.hpp"

namespace h22::integrate {

namespace {

using boost::math::quadrature::gauss_kronrod;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMaxError = 1e-9;

template <class F>
double adaptive(F f, double a, double b, double tol) {
  double err = 0.0;
  const double v = gauss_kronrod<double, 31>::integrate(f, a, b, 10, tol, &err);
  if (!(err <= kMaxError * std::max(1.0, std::abs(v)))) throw AccuracyError("adaptive quadrature did not converge");
  return v;
}

}  // namespace

TwoPointResult twopoint_law_check(double w, const std::function<double(double)>& g, double p_delta, double p_1) {
  if (!(w > 0.0) || !std::isfinite(w)) throw PreconditionError("W must be positive");
  TwoPointResult r;
  r.w = w;

  // G(1, delta) / G(delta, delta) = W / (2 beta_1); Jacobian of (v, u) -> beta is 4 u v.
  auto outer = [&](double v) {
    if (v == 0.0) return 0.0;
    const double b1 = v * v;
    const double ratio = w / (2.0 * b1);
    const double gv = g(p_delta + p_1 * ratio);
    auto inner = [&](double u) {
      if (u == 0.0) return 0.0;
      return graph::q_density_2pt_shifted(w, b1, u * u) * 4.0 * u * v;
    };
    const double mass = adaptive(inner, 0.0, kInf, 1e-12);
    return gv == 0.0 || mass == 0.0 ? 0.0 : gv * mass;
  };
  // The v-integrand concentrates near v ~ W / 2; split there for small W.
  const double cuts[] = {0.0, 0.125 * w, 0.5 * w, 2.0 * w, std::max(4.0, 4.0 * w), kInf};
  r.beta_side = 0.0;
  for (int i = 0; i + 1 < 6; ++i) r.beta_side += adaptive(outer, cuts[i], cuts[i + 1], 1e-12);

  auto density = [&](double t) {
    const double log_nu = 0.5 * std::log(w / (2.0 * std::numbers::pi)) - w * (std::cosh(t) - 1.0) - 0.5 * t;
    if (log_nu < -745.0) return 0.0;
    return g(p_delta + p_1 * std::exp(t)) * std::exp(log_nu);
  };
  // The integrand is super-exponentially small beyond |t| = 40 for W >= 1e-12.
  r.t_side = adaptive(density, -40.0, 0.0, 1e-12) + adaptive(density, 0.0, 40.0, 1e-12);
  r.residual = std::abs(r.beta_side - r.t_side);
  return r;
}

std::vector<TwoPointProbe> twopoint_probe_bank() {
  auto softplus = [](double z) { return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); };
  return {
      {"linear", [](double u) { return u; }, 0.0, 1.0},
      {"square", [](double u) { return u * u; }, 0.0, 1.0},
      {"shifted-square", [](double u) { return u * u; }, -1.0, 1.0},
      {"softplus", [softplus](double u) { return softplus(2.0 * u); }, 1.0, -1.0},
      {"sqrt1p", [](double u) { return std::sqrt(1.0 + u * u); }, 0.5, 0.75},
  };
}

TwoPointScan twopoint_scan(const TwoPointProbe& probe, const std::vector<double>& w_grid, double residual_tol,
                           double slack) {
  TwoPointScan scan;
  scan.probe = probe.name;
  for (double w : w_grid) {
    scan.points.push_back(twopoint_law_check(w, probe.g, probe.p_delta, probe.p_1));
    scan.max_residual = std::max(scan.max_residual, scan.points.back().residual);
  }
  for (std::size_t i = 1; i < scan.points.size(); ++i)
    scan.max_increase = std::max(scan.max_increase, scan.points[i].beta_side - scan.points[i - 1].beta_side);
  scan.pass = scan.max_residual <= residual_tol && scan.max_increase <= slack;
  return scan;
}

}  // namespace h22::integrate
