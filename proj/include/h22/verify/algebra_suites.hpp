#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "h22/superalgebra/supernumber.hpp"
#include "h22/verify/identity_check.hpp"

namespace h22::verify {

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  bool tamper_sign = false;  // fixture: flip the Berezin pair order in the fermionic Gaussian suite
  int threads = 0;
};

/// Integral of Q(P e^{-w sum H_i / 2}) against the flat measure, split as
/// [Q(P E_f) - w sum_i (x_i xi_i + y_i eta_i) P E_f] times the bosonic weight.
/// Must vanish exactly. PreconditionError unless P has plain polynomial coefficients.
IdentityCheck verify_localization(const susy::SuperNumber& p, const susy::Rational& w);

/// int Q(f) g A = -(-1)^{|f|} int f Q(g) A under the flat Q-invariant weight A.
/// DomainError for mixed-parity f.
IdentityCheck verify_ibp(const susy::SuperNumber& f, const susy::SuperNumber& g, const susy::Rational& w);

/// One-site chain for I(w) = E[f(N)], N ~ N(0, 1/w), f given by its coefficients:
/// the SUSY representation of I, dI/dw against each rewritten form, and the
/// closed form -E[f''(N)] / (2 w^2).
std::vector<IdentityCheck> verify_slepian_chain(const std::vector<susy::Rational>& f, const susy::Rational& w);

/// Q-exactness ladder on the rooted one-point graph (N = 1, extended ring).
std::vector<IdentityCheck> verify_onepoint_ladder();

/// For F(x_1..x_N) and sites k, i, j (1-based), with A the flat weight:
/// int F x_k xi_i eta_j A = -int F x_k y_i y_j A = sum_l int d_l F xi_l eta_k y_i y_j A.
/// Returns the two equalities as separate checks.
std::vector<IdentityCheck> verify_switching_flat(const susy::Polynomial& f, int sites, int k, int i, int j,
                                                 std::span<const susy::Rational> w);

/// Cofactor-expansion determinant, the oracle for the fermionic Gaussian suite.
susy::Rational cofactor_det(const std::vector<std::vector<susy::Rational>>& m);

std::vector<IdentityCheck> algebra_suite(const SuiteOptions& opt);
std::vector<IdentityCheck> onepoint_suite(const SuiteOptions& opt);
std::vector<IdentityCheck> fermionic_gaussian_suite(const SuiteOptions& opt);
std::vector<IdentityCheck> localization_suite(const SuiteOptions& opt);
std::vector<IdentityCheck> ibp_suite(const SuiteOptions& opt);
std::vector<IdentityCheck> slepian_suite(const SuiteOptions& opt);
std::vector<IdentityCheck> switching_suite(const SuiteOptions& opt);

}  // namespace h22::verify
