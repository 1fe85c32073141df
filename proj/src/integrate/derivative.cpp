#include "h22/integrate/derivative.hpp"

#include <algorithm>
#include <cmath>

#include "h22/errors.hpp"
#include "h22/graph/mixing_density.hpp"

namespace h22::integrate {

double fd_step(double w) { return 1e-4 * std::max(1.0, w); }

int edge_index(const graph::RootedGraph& g, graph::Edge e) {
  const auto edges = graph::all_edges(g);
  const auto canon = graph::make_edge(e.a, e.b);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i] == canon) return static_cast<int>(i);
  throw PreconditionError("edge is not part of the graph");
}

ProbeMoments quad_probe_moments(const graph::RootedGraph& g, const std::vector<Probe>& probes,
                                std::optional<graph::Edge> edge, const QuadratureSpec& spec) {
  const int row = edge ? edge_index(g, *edge) : -1;
  ProbeMoments out{std::vector<double>(probes.size(), 0.0), std::vector<double>(edge ? probes.size() : 0, 0.0)};
  std::vector<double> x(g.n());
  for_each_block(g, spec, edge.has_value(), [&](const GridBlock& b) {
    for (std::size_t p = 0; p < b.count; ++p) {
      if (b.density[p] == 0.0) continue;
      for (int k = 0; k < b.n; ++k) x[k] = std::exp(b.t[k][p]);
      const double wd = b.weight[p] * b.density[p];
      const double s = edge ? b.score[row * b.count + p] : 0.0;
      for (std::size_t q = 0; q < probes.size(); ++q) {
        const double f = probes[q].eval(x);
        out.k[q] += wd * f;
        if (edge) out.score[q] += wd * f * s;
      }
    }
  });
  return out;
}

Estimate dK_dW_quad(const graph::RootedGraph& g, graph::Edge e, const Probe& probe, Method method,
                    const QuadratureSpec& spec) {
  if (g.n() > kernels::kMaxBulk) throw SizeError("quadrature backend supports N <= 3");
  const std::vector<Probe> one{probe};
  if (method == Method::score) return {quad_probe_moments(g, one, e, spec).score[0], 0.0};
  const double w = g.weight(e), h = fd_step(w);
  if (w - h <= 0.0) throw PreconditionError("finite differences need W > h on the varied edge");
  const double up = quad_probe_moments(g.with_weight(e, w + h), one, std::nullopt, spec).k[0];
  const double dn = quad_probe_moments(g.with_weight(e, w - h), one, std::nullopt, spec).k[0];
  return {(up - dn) / (2.0 * h), 0.0};
}

std::vector<double> mcmc_edge_factors(const graph::RootedGraph& g, const Chain& chain, graph::Edge e, Method method) {
  if (g.n() > 6) throw SizeError("MCMC backend supports N <= 6");
  if (chain.n != g.n()) throw SizeError("chain dimension does not match the graph");
  const auto canon = graph::make_edge(e.a, e.b);
  const double w = g.weight(canon), h = fd_step(w);
  const auto up = g.with_weight(canon, w + h);
  const auto dn = method == Method::finite_diff ? g.with_weight(canon, w - h) : g;

  std::vector<double> factors(chain.size());
  Eigen::VectorXd full(g.n() + 1);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    auto t = chain.row(i);
    for (int k = 0; k < g.n(); ++k) full(k) = t[k];
    full(g.n()) = 0.0;
    if (method == Method::score) {
      factors[i] = graph::dW_log_density(g, full, g.root(), canon);
    } else {
      const double base = graph::log_mixing_density(g, full, g.root());
      factors[i] = (std::exp(graph::log_mixing_density(up, full, g.root()) - base) -
                    std::exp(graph::log_mixing_density(dn, full, g.root()) - base)) /
                   (2.0 * h);
    }
  }
  return factors;
}

Estimate dK_dW_mcmc(const Chain& chain, std::span<const double> factors, const Probe& probe, int batches) {
  const std::size_t m = chain.size();
  if (factors.size() != m) throw PreconditionError("one edge factor per chain sample required");
  std::vector<double> f(m), x(chain.n);
  double fbar = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    auto t = chain.row(i);
    for (int k = 0; k < chain.n; ++k) x[k] = std::exp(t[k]);
    f[i] = probe.eval(x);
    fbar += f[i];
  }
  fbar /= static_cast<double>(m);

  // Both E[s_e] and E[r_+ - r_-] vanish, so centring F only removes variance.
  std::vector<double> series(m);
  for (std::size_t i = 0; i < m; ++i) series[i] = (f[i] - fbar) * factors[i];
  const auto est = batch_means(series, batches);
  return {est.mean, est.std_error};
}

Estimate dK_dW_mcmc(const graph::RootedGraph& g, const Chain& chain, graph::Edge e, const Probe& probe, Method method,
                    int batches) {
  return dK_dW_mcmc(chain, mcmc_edge_factors(g, chain, e, method), probe, batches);
}

}  // namespace h22::integrate
