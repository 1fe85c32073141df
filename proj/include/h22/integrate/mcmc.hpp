#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "h22/graph/rooted_graph.hpp"
#include "h22/integrate/quadrature.hpp"

namespace h22::integrate {

/// Random-walk Metropolis on nu_delta. During burn-in the proposal scale is
/// tuned towards 30-50% acceptance; afterwards it is frozen.
struct ChainSpec {
  std::uint64_t seed = 1;
  long steps = 200000;
  long burn_in = 20000;
  double scale = 0.5;
  int batches = 50;
};

struct Chain {
  int n = 0;
  std::vector<double> samples;  // (steps - burn_in) rows of n coordinates
  double acceptance = 0.0;      // over the kept steps
  double scale = 0.0;           // frozen proposal scale
  std::size_t size() const { return n ? samples.size() / n : 0; }
  std::span<const double> row(std::size_t i) const { return {samples.data() + i * n, static_cast<std::size_t>(n)}; }
};

/// ConfigError for a non-positive or non-finite scale, steps <= burn_in,
/// burn_in < 0 or fewer than 2 batches.
void validate(const ChainSpec& spec);

Chain mcmc_chain(const graph::RootedGraph& g, const ChainSpec& spec);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  double ess = 0.0;
};

/// Batch-means mean, standard error and effective sample size.
McEstimate batch_means(std::span<const double> series, int batches);

McEstimate chain_expectation(const Chain& chain, const TFunction& f, int batches);

}  // namespace h22::integrate
