#include "h22/integrate/gauss_legendre.hpp"

#include <algorithm>
#include <boost/math/special_functions/legendre.hpp>

#include "h22/errors.hpp"

namespace h22::integrate {

Rule gauss_legendre(int n, double a, double b) {
  if (n < 2) throw PreconditionError("a Gauss-Legendre rule needs at least 2 nodes");
  if (!(a < b)) throw PreconditionError("integration interval must satisfy a < b");
  // Boost returns the nonnegative zeros in increasing order; weights 2 / ((1 - x^2) P_n'(x)^2).
  const auto zeros = boost::math::legendre_p_zeros<long double>(n);
  std::vector<long double> x, w;
  for (long double z : zeros) {
    const long double d = boost::math::legendre_p_prime<long double>(n, z);
    const long double wt = 2.0L / ((1.0L - z * z) * d * d);
    if (z == 0.0L) {
      x.push_back(z);
      w.push_back(wt);
    } else {
      x.push_back(z);
      w.push_back(wt);
      x.push_back(-z);
      w.push_back(wt);
    }
  }
  std::vector<std::size_t> order(x.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return x[i] < x[j]; });

  const long double half = 0.5L * (static_cast<long double>(b) - a), mid = 0.5L * (static_cast<long double>(b) + a);
  Rule rule;
  for (auto i : order) {
    rule.nodes.push_back(static_cast<double>(mid + half * x[i]));
    rule.weights.push_back(static_cast<double>(half * w[i]));
  }
  return rule;
}

}  // namespace h22::integrate
