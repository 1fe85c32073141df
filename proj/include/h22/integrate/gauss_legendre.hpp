#pragma once

#include <vector>

namespace h22::integrate {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule mapped to [a, b]; PreconditionError for n < 2 or a >= b.
Rule gauss_legendre(int n, double a, double b);

}  // namespace h22::integrate
