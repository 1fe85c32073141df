#pragma once

#include <vector>

#include "h22/verify/algebra_suites.hpp"

namespace h22::verify {

// Property batteries over the graph and integration layers. Every check
// carries its tolerance; failures are recorded, never thrown.
std::vector<IdentityCheck> matrix_tree_suite(const SuiteOptions& opt);   // 200 instances, N <= 5
std::vector<IdentityCheck> partition_suite(const SuiteOptions& opt);     // |Z - 1| <= 1e-6, N = 1..3
std::vector<IdentityCheck> ward_suite(const SuiteOptions& opt);          // |E[e^{t_k}] - 1| <= 1e-6
std::vector<IdentityCheck> monotonicity_suite(const SuiteOptions& opt);  // quadrature scan, N = 1..3
std::vector<IdentityCheck> mcmc_suite(const SuiteOptions& opt);          // N = 5 sign test
std::vector<IdentityCheck> rerooting_suite(const SuiteOptions& opt);     // 1000 points, N <= 4
std::vector<IdentityCheck> schur_suite(const SuiteOptions& opt);         // 200 instances, N <= 6
std::vector<IdentityCheck> twopoint_suite(const SuiteOptions& opt);
std::vector<IdentityCheck> perspective_suite(const SuiteOptions& opt);   // 1e5 samples per probe

}  // namespace h22::verify
