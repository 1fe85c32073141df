#include "h22/integrate/probes.hpp"

#include <cmath>
#include <random>

#include "h22/errors.hpp"

namespace h22::integrate {

namespace {

double softplus(double z) { return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }
double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

Eigen::VectorXd to_vector(std::span<const double> x) {
  return Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size()));
}

JointProbe quadratic_form(std::string name, Eigen::MatrixXd a, Eigen::VectorXd b) {
  JointProbe j;
  j.name = std::move(name);
  j.eval = [a, b](const Eigen::VectorXd& x) { return x.dot(a * x) + b.dot(x); };
  j.hessian = [a](const Eigen::VectorXd&) { return Eigen::MatrixXd(2.0 * a); };
  return j;
}

}  // namespace

std::vector<ScalarFunction> convex_scalar_bank() {
  return {
      {"linear", [](double u) { return u; }, [](double) { return 1.0; }, [](double) { return 0.0; }},
      {"square", [](double u) { return u * u; }, [](double u) { return 2.0 * u; }, [](double) { return 2.0; }},
      {"shifted-square", [](double u) { return (u - 1.0) * (u - 1.0); }, [](double u) { return 2.0 * (u - 1.0); },
       [](double) { return 2.0; }},
      // Steeper exponentials are not integrable at small boundary weights.
      {"exp-tenth", [](double u) { return std::exp(0.1 * u); }, [](double u) { return 0.1 * std::exp(0.1 * u); },
       [](double u) { return 0.01 * std::exp(0.1 * u); }},
      {"softplus", [](double u) { return softplus(2.0 * (u - 1.0)); }, [](double u) { return 2.0 * logistic(2.0 * (u - 1.0)); },
       [](double u) {
         const double s = logistic(2.0 * (u - 1.0));
         return 4.0 * s * (1.0 - s);
       }},
      {"sqrt1p", [](double u) { return std::sqrt(1.0 + u * u); }, [](double u) { return u / std::sqrt(1.0 + u * u); },
       [](double u) { return std::pow(1.0 + u * u, -1.5); }},
  };
}

ScalarFunction nonconvex_demo() {
  return {"nonconvex-demo", [](double u) { return -u * u; }, [](double u) { return -2.0 * u; }, [](double) { return -2.0; }};
}

Eigen::VectorXd default_coefficients(int n) {
  static const double base[] = {1.0, -0.5, 0.75, 0.25, -0.3, 0.6};
  if (n < 1 || n > 6) throw SizeError("probe coefficients are defined for 1 <= N <= 6");
  Eigen::VectorXd p(n);
  for (int k = 0; k < n; ++k) p(k) = base[k];
  return p;
}

std::vector<JointProbe> joint_bank(int n) {
  JointProbe lse;
  lse.name = "logsumexp";
  lse.eval = [](const Eigen::VectorXd& x) {
    const double m = x.maxCoeff();
    return m + std::log((x.array() - m).exp().sum());
  };
  lse.hessian = [](const Eigen::VectorXd& x) {
    const Eigen::VectorXd s = (x.array() - x.maxCoeff()).exp().matrix();
    const Eigen::VectorXd pr = s / s.sum();
    return Eigen::MatrixXd(Eigen::MatrixXd(pr.asDiagonal()) - pr * pr.transpose());
  };

  // B has a zero column when n > 1, so A = B B^T is singular but PSD.
  Eigen::MatrixXd bmat = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j + 1 < n || n == 1) bmat(i, j) = (i == j ? 1.0 : 0.0) + 0.3 * ((i + 2 * j) % 3 - 1);
  Eigen::VectorXd b = Eigen::VectorXd::LinSpaced(n, -0.5, 0.5);
  return {lse, quadratic_form("psd-quadratic", bmat * bmat.transpose(), b)};
}

JointProbe random_convex_quadratic(int n, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z(0.0, 1.0);
  Eigen::MatrixXd bmat(n, n);
  Eigen::VectorXd b(n);
  for (int i = 0; i < n; ++i) {
    b(i) = z(rng);
    for (int j = 0; j < n; ++j) bmat(i, j) = z(rng);
  }
  return quadratic_form("random-quadratic", bmat * bmat.transpose(), b);
}

Probe as_probe(const ConvexProbe& c) {
  Probe p;
  p.name = c.f.name;
  p.convex = c.f.name != nonconvex_demo().name;
  auto f = c.f.eval;
  auto coef = c.p;
  p.eval = [f, coef](std::span<const double> x) {
    double u = 0.0;
    for (Eigen::Index k = 0; k < coef.size(); ++k) u += coef(k) * x[k];
    return f(u);
  };
  return p;
}

Probe as_probe(const JointProbe& j) {
  Probe p;
  p.name = j.name;
  auto f = j.eval;
  p.eval = [f](std::span<const double> x) { return f(to_vector(x)); };
  return p;
}

std::vector<Probe> default_probe_bank(int n) {
  std::vector<Probe> out;
  for (auto& f : convex_scalar_bank()) out.push_back(as_probe(ConvexProbe{f, default_coefficients(n)}));
  for (auto& j : joint_bank(n)) out.push_back(as_probe(j));
  return out;
}

std::vector<Probe> select_probes(const std::string& name, int n) {
  if (name == "default") return default_probe_bank(n);
  if (name == "nonconvex-demo") return {as_probe(ConvexProbe{nonconvex_demo(), default_coefficients(n)})};
  for (auto& p : default_probe_bank(n))
    if (p.name == name) return {p};
  throw ConfigError("unknown probe '" + name + "'");
}

ProbeConsistency check_scalar_function(const ScalarFunction& f, double lo, double hi, int samples) {
  ProbeConsistency out;
  out.min_d2 = INFINITY;
  for (int i = 0; i < samples; ++i) {
    const double u = lo + (hi - lo) * (i + 0.5) / samples;
    const double h = 1e-4 * std::max(1.0, std::abs(u));
    const double d1_fd = (f.eval(u + h) - f.eval(u - h)) / (2.0 * h);
    const double d2_fd = (f.d1(u + h) - f.d1(u - h)) / (2.0 * h);
    out.min_d2 = std::min(out.min_d2, f.d2(u));
    out.max_d1_error = std::max(out.max_d1_error, std::abs(d1_fd - f.d1(u)) / std::max(1.0, std::abs(f.d1(u))));
    out.max_d2_error = std::max(out.max_d2_error, std::abs(d2_fd - f.d2(u)) / std::max(1.0, std::abs(f.d2(u))));
  }
  return out;
}

}  // namespace h22::integrate
