#include "h22/integrate/mcmc.hpp"

#include <cmath>
#include <random>

#include "h22/errors.hpp"
#include "h22/graph/mixing_density.hpp"

namespace h22::integrate {

void validate(const ChainSpec& spec) {
  if (!(spec.scale > 0.0) || !std::isfinite(spec.scale)) throw ConfigError("proposal scale must be positive and finite");
  if (spec.burn_in < 0) throw ConfigError("burn-in must be nonnegative");
  if (spec.steps <= spec.burn_in) throw ConfigError("steps must exceed burn-in");
  if (spec.batches < 2) throw ConfigError("batch means need at least 2 batches");
  if (spec.steps - spec.burn_in < spec.batches) throw ConfigError("fewer kept steps than batches");
}

Chain mcmc_chain(const graph::RootedGraph& g, const ChainSpec& spec) {
  validate(spec);
  const int n = g.n();
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> step(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  Eigen::VectorXd cur = Eigen::VectorXd::Zero(n + 1), prop(n + 1);
  double cur_log = graph::log_mixing_density(g, cur, g.root());
  double scale = spec.scale;

  Chain chain;
  chain.n = n;
  chain.samples.reserve(static_cast<std::size_t>(spec.steps - spec.burn_in) * n);
  long window_accepted = 0, window = 0, kept_accepted = 0;
  for (long s = 0; s < spec.steps; ++s) {
    prop = cur;
    for (int k = 0; k < n; ++k) prop(k) += scale * step(rng);
    const double prop_log = graph::log_mixing_density(g, prop, g.root());
    const bool accept = std::log(unif(rng)) < prop_log - cur_log;
    if (accept) {
      cur.swap(prop);
      cur_log = prop_log;
    }
    if (s < spec.burn_in) {
      window_accepted += accept;
      if (++window == 500) {
        const double rate = static_cast<double>(window_accepted) / window;
        if (rate < 0.3) scale *= 0.8;
        if (rate > 0.5) scale *= 1.25;
        window = window_accepted = 0;
      }
      continue;
    }
    kept_accepted += accept;
    for (int k = 0; k < n; ++k) chain.samples.push_back(cur(k));
  }
  chain.acceptance = static_cast<double>(kept_accepted) / static_cast<double>(spec.steps - spec.burn_in);
  chain.scale = scale;
  return chain;
}

McEstimate batch_means(std::span<const double> series, int batches) {
  const std::size_t total = series.size();
  if (batches < 2 || total < static_cast<std::size_t>(batches)) throw PreconditionError("not enough samples for batch means");
  const std::size_t size = total / batches;
  double mean = 0.0;
  for (double v : series) mean += v;
  mean /= static_cast<double>(total);

  // The trailing remainder (< one batch) enters the mean but not the batches.
  double batch_var = 0.0, sample_var = 0.0;
  for (int b = 0; b < batches; ++b) {
    double m = 0.0;
    for (std::size_t i = b * size; i < (b + 1) * size; ++i) m += series[i];
    m /= static_cast<double>(size);
    batch_var += (m - mean) * (m - mean);
  }
  batch_var /= batches - 1;
  for (double v : series) sample_var += (v - mean) * (v - mean);
  sample_var /= static_cast<double>(total - 1);

  McEstimate out;
  out.mean = mean;
  out.std_error = std::sqrt(batch_var / batches);
  const double sigma2 = batch_var * static_cast<double>(size);
  out.ess = sigma2 > 0.0 ? static_cast<double>(total) * sample_var / sigma2 : static_cast<double>(total);
  return out;
}

McEstimate chain_expectation(const Chain& chain, const TFunction& f, int batches) {
  std::vector<double> series(chain.size());
  for (std::size_t i = 0; i < chain.size(); ++i) series[i] = f(chain.row(i));
  return batch_means(series, batches);
}

}  // namespace h22::integrate
