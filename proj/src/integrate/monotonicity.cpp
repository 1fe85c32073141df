#include "h22/integrate/monotonicity.hpp"

#include <algorithm>
#include <cmath>

#include "h22/errors.hpp"
#include "h22/integrate/parallel.hpp"

namespace h22::integrate {

namespace {

struct PointResult {
  std::vector<double> k, score, fd;
};

}  // namespace

std::vector<MonotonicityReport> monotonicity_scan(const graph::RootedGraph& g, const std::string& graph_id,
                                                  const std::vector<Probe>& probes, const ScanSpec& spec) {
  if (g.n() > kernels::kMaxBulk) throw SizeError("quadrature scan supports N <= 3");
  if (spec.w_grid.empty()) throw ConfigError("W grid is empty");
  for (double w : spec.w_grid)
    if (!(w > fd_step(w)) || !std::isfinite(w)) throw ConfigError("W grid values must be positive and exceed the difference step");
  const auto edges = spec.edges.empty() ? graph::all_edges(g) : spec.edges;
  const std::size_t nw = spec.w_grid.size();

  std::vector<PointResult> results(edges.size() * nw);
  parallel_for(results.size(), spec.threads, [&](std::size_t task) {
    const auto e = graph::make_edge(edges[task / nw].a, edges[task / nw].b);
    const double w = spec.w_grid[task % nw], h = fd_step(w);
    const auto at = g.with_weight(e, w);
    auto centre = quad_probe_moments(at, probes, e, spec.quad);
    auto up = quad_probe_moments(g.with_weight(e, w + h), probes, std::nullopt, spec.quad);
    auto dn = quad_probe_moments(g.with_weight(e, w - h), probes, std::nullopt, spec.quad);
    PointResult r{centre.k, centre.score, std::vector<double>(probes.size())};
    for (std::size_t q = 0; q < probes.size(); ++q) r.fd[q] = (up.k[q] - dn.k[q]) / (2.0 * h);
    results[task] = std::move(r);
  });

  std::vector<MonotonicityReport> out;
  for (std::size_t ei = 0; ei < edges.size(); ++ei) {
    const auto e = graph::make_edge(edges[ei].a, edges[ei].b);
    for (std::size_t q = 0; q < probes.size(); ++q) {
      MonotonicityReport rep;
      rep.graph_id = graph_id;
      rep.edge = e;
      rep.edge_name = g.edge_name(e);
      rep.probe = probes[q].name;
      rep.convex = probes[q].convex;
      rep.w_grid = spec.w_grid;
      for (std::size_t wi = 0; wi < nw; ++wi) {
        const auto& r = results[ei * nw + wi];
        rep.k.push_back(r.k[q]);
        rep.score.push_back(r.score[q]);
        rep.finite_diff.push_back(r.fd[q]);
        rep.error.push_back(std::abs(r.score[q] - r.fd[q]));
        rep.max_violation = std::max({rep.max_violation, r.score[q], r.fd[q]});
        rep.agree = rep.agree && rep.error.back() <= spec.agreement;
      }
      rep.pass = rep.max_violation <= spec.tolerance && rep.agree;
      out.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace h22::integrate
