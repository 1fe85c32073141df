#pragma once

#include <optional>
#include <span>
#include <vector>

#include "h22/graph/rooted_graph.hpp"
#include "h22/integrate/mcmc.hpp"
#include "h22/integrate/probes.hpp"
#include "h22/integrate/quadrature.hpp"

namespace h22::integrate {

enum class Method { score, finite_diff };

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;  // zero for the deterministic quadrature backend
};

/// Central difference step h = 1e-4 max(1, W).
double fd_step(double w);

/// Position of e in graph::all_edges(g).
int edge_index(const graph::RootedGraph& g, graph::Edge e);

/// K_p = E[F_p(e^t)] for every probe and, with an edge, E[F_p s_e] where s_e is
/// the W_e-score of nu_delta, from one quadrature pass.
struct ProbeMoments {
  std::vector<double> k;
  std::vector<double> score;
};
ProbeMoments quad_probe_moments(const graph::RootedGraph& g, const std::vector<Probe>& probes,
                                std::optional<graph::Edge> edge, const QuadratureSpec& spec);

/// dK/dW_e by quadrature (N <= 3, SizeError otherwise).
Estimate dK_dW_quad(const graph::RootedGraph& g, graph::Edge e, const Probe& probe, Method method,
                    const QuadratureSpec& spec = {});

/// dK/dW_e from a chain sampled at the current weights (N <= 6, SizeError otherwise).
/// The score form averages (F - mean F) s_e; the finite-difference form
/// reweights the samples to W_e +- h.
Estimate dK_dW_mcmc(const graph::RootedGraph& g, const Chain& chain, graph::Edge e, const Probe& probe, Method method,
                    int batches);

/// Per-sample factor of dK_dW_mcmc (the score s_e, or the reweighted
/// difference quotient), computed once and shared across probes.
std::vector<double> mcmc_edge_factors(const graph::RootedGraph& g, const Chain& chain, graph::Edge e, Method method);
Estimate dK_dW_mcmc(const Chain& chain, std::span<const double> factors, const Probe& probe, int batches);

}  // namespace h22::integrate
