#pragma once

#include <span>
#include <vector>

#include "h22/superalgebra/operators.hpp"

namespace h22::susy {

/// E[X^k] for a centered normal X with variance 1/w: (k-1)!! / w^(k/2), 0 for odd k.
Rational gaussian_moment(int k, const Rational& w);

/// prod_i (1 - w_i xi_i eta_i): the Grassmann part of exp(-sum_i w_i H_i / 2).
SuperNumber fermionic_gaussian_factor(int sites, std::span<const Rational> w);

/// Integral of a * exp(-sum_i w_i (x_i^2 + y_i^2) / 2) against the flat form
/// prod_i (1/2pi) dx_i dy_i d_xi_i d_eta_i. Coefficients of `a` must be plain
/// polynomials in x, y (PreconditionError otherwise). The Grassmann part of the
/// weight is not included: multiply by fermionic_gaussian_factor for the full
/// Q-invariant weight.
Rational gaussian_flat_integrate(const SuperNumber& a, std::span<const Rational> w,
                                 BerezinOrder order = BerezinOrder::eta_inner);

/// Purely bosonic integral of p * exp(-sum_i w_i (x_i^2 + y_i^2) / 2) against
/// prod_i dx_i dy_i / (2 pi). `p` must be a plain polynomial.
Rational bosonic_gaussian_integrate(const Polynomial& p, std::span<const Rational> w);

/// Builds exp(-<xi, Sigma eta>) and integrates every pair: reproduces det(Sigma).
Rational fermionic_gaussian_integral(const std::vector<std::vector<Rational>>& sigma,
                                     BerezinOrder order = BerezinOrder::eta_inner);

}  // namespace h22::susy
