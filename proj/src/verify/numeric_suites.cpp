#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "h22/graph/mixing_density.hpp"
#include "h22/graph/schrodinger.hpp"
#include "h22/graph/spanning_trees.hpp"
#include "h22/integrate/derivative.hpp"
#include "h22/integrate/mcmc.hpp"
#include "h22/integrate/monotonicity.hpp"
#include "h22/integrate/perspective.hpp"
#include "h22/integrate/quadrature.hpp"
#include "h22/integrate/twopoint.hpp"
#include "h22/verify/numeric_suites.hpp"

namespace h22::verify {

using graph::Edge;
using graph::RootedGraph;

namespace {

std::mt19937_64 suite_rng(const SuiteOptions& opt, std::string_view suite) {
  return std::mt19937_64(opt.seed ^ fnv1a(suite));
}

RootedGraph random_graph(std::mt19937_64& rng, int n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) w(i, j) = w(j, i) = u(rng);
  return RootedGraph(w);
}

std::string weights_text(const RootedGraph& g) {
  std::string s = "N=" + std::to_string(g.n()) + " W=[";
  bool first = true;
  for (auto e : graph::all_edges(g)) {
    s += (first ? "" : ",") + g.edge_name(e) + ":" + format_double(g.weight(e));
    first = false;
  }
  return s + "]";
}

std::string vector_text(const Eigen::VectorXd& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_double(v(i));
  return s + ")";
}

// The five weight draws per N shared by the partition and Ward suites.
std::vector<RootedGraph> normalization_graphs(const SuiteOptions& opt) {
  auto rng = suite_rng(opt, "normalization");
  std::vector<RootedGraph> out;
  for (int n = 1; n <= 3; ++n)
    for (int draw = 0; draw < 5; ++draw) out.push_back(random_graph(rng, n, 0.2, 3.0));
  return out;
}

}  // namespace

std::vector<IdentityCheck> matrix_tree_suite(const SuiteOptions& opt) {
  auto rng = suite_rng(opt, "matrix_tree");
  std::uniform_real_distribution<double> tdist(-2.0, 2.0);
  std::vector<IdentityCheck> out;
  for (int inst = 0; inst < 200; ++inst) {
    const int n = 1 + inst % 5;
    const auto g = random_graph(rng, n, 0.1, 3.0);
    Eigen::VectorXd t(n);
    for (auto& v : t) v = tdist(rng);
    const double trees = graph::d_w_trees(g, t);
    const double det = graph::d_w_det(g, t);
    const double rel = std::abs(trees - det) / std::abs(trees);
    auto c = numeric_at_most("matrix_tree", "trees=det", weights_text(g) + " t=" + vector_text(t), 1e-10, rel);
    c.got = format_double(rel) + " (trees " + format_double(trees) + ", det " + format_double(det) + ")";
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<IdentityCheck> partition_suite(const SuiteOptions& opt) {
  std::vector<IdentityCheck> out;
  for (const auto& g : normalization_graphs(opt)) {
    const double z = integrate::quad_expectation(g, [](std::span<const double>) { return 1.0; });
    out.push_back(numeric_close("partition", "Z=1", weights_text(g), 1.0, z, 1e-6));
  }
  return out;
}

std::vector<IdentityCheck> ward_suite(const SuiteOptions& opt) {
  std::vector<IdentityCheck> out;
  for (const auto& g : normalization_graphs(opt)) {
    for (int k = 0; k < g.n(); ++k) {
      const double m = integrate::quad_expectation(g, [k](std::span<const double> t) { return std::exp(t[k]); });
      out.push_back(numeric_close("ward", "E[e^t_" + std::to_string(k + 1) + "]=1", weights_text(g), 1.0, m, 1e-6));
    }
  }
  return out;
}

std::vector<IdentityCheck> monotonicity_suite(const SuiteOptions& opt) {
  auto rng = suite_rng(opt, "monotonicity");
  integrate::ScanSpec spec;
  spec.threads = opt.threads;
  std::vector<IdentityCheck> out;
  const std::size_t scalar = integrate::convex_scalar_bank().size(), joint = integrate::joint_bank(3).size();
  out.push_back(predicate("monotonicity", "probe bank size", "", ">= 5 scalar convex, >= 2 jointly convex",
                          std::to_string(scalar) + " scalar, " + std::to_string(joint) + " joint",
                          scalar >= 5 && joint >= 2));
  out.push_back(predicate("monotonicity", "W grid size", "", ">= 5 points per edge",
                          std::to_string(spec.w_grid.size()) + " points", spec.w_grid.size() >= 5));
  for (int n = 1; n <= 3; ++n) {
    const auto g = random_graph(rng, n, 0.5, 2.0);
    const std::string id = "N" + std::to_string(n);
    for (const auto& r : integrate::monotonicity_scan(g, id, integrate::default_probe_bank(n), spec)) {
      double worst = -INFINITY, worst_err = 0.0;
      for (std::size_t i = 0; i < r.w_grid.size(); ++i) {
        worst = std::max({worst, r.score[i], r.finite_diff[i]});
        worst_err = std::max(worst_err, r.error[i]);
      }
      auto c = predicate("monotonicity", "dK/dW<=1e-8 " + r.edge_name + " " + r.probe, weights_text(g),
                         "max dK/dW <= 1e-08, |score-fd| <= 1e-06",
                         "max dK/dW " + format_double(worst) + ", |score-fd| " + format_double(worst_err), r.pass);
      c.tolerance = spec.tolerance;
      out.push_back(std::move(c));
    }
    // The scan must also notice a non-convex probe.
    const auto demo = integrate::select_probes("nonconvex-demo", n);
    for (const auto& r : integrate::monotonicity_scan(g, id, demo, spec)) {
      out.push_back(predicate("monotonicity", "nonconvex flagged " + r.edge_name, weights_text(g),
                              "violation > 1e-08", "max violation " + format_double(r.max_violation),
                              !r.pass && r.max_violation > spec.tolerance));
    }
  }
  return out;
}

std::vector<IdentityCheck> mcmc_suite(const SuiteOptions& opt) {
  auto rng = suite_rng(opt, "mcmc");
  const int n = 5;
  const auto g = random_graph(rng, n, 0.5, 1.5);
  integrate::ChainSpec cs;
  cs.seed = rng();
  const auto chain = integrate::mcmc_chain(g, cs);
  const Edge edges[] = {graph::make_edge(0, g.root()), graph::make_edge(0, 1)};
  std::vector<IdentityCheck> out;
  for (const auto& e : edges) {
    const auto score = integrate::mcmc_edge_factors(g, chain, e, integrate::Method::score);
    const auto diff = integrate::mcmc_edge_factors(g, chain, e, integrate::Method::finite_diff);
    for (const auto& p : integrate::default_probe_bank(n)) {
      const auto s = integrate::dK_dW_mcmc(chain, score, p, cs.batches);
      const auto f = integrate::dK_dW_mcmc(chain, diff, p, cs.batches);
      const std::string in = weights_text(g) + " seed=" + std::to_string(cs.seed);
      const std::string tag = g.edge_name(e) + " " + p.name;
      auto sign = numeric_at_most("mcmc", "sign " + tag, in, 3.0 * s.std_error, s.value);
      sign.got = format_double(s.value) + " +- " + format_double(s.std_error);
      out.push_back(std::move(sign));
      const double se = std::hypot(s.std_error, f.std_error);
      auto agree = numeric_close("mcmc", "score=fd " + tag, in, s.value, f.value, 3.0 * se);
      out.push_back(std::move(agree));
    }
  }
  return out;
}

std::vector<IdentityCheck> rerooting_suite(const SuiteOptions& opt) {
  auto rng = suite_rng(opt, "rerooting");
  std::uniform_real_distribution<double> tdist(-3.0, 3.0);
  std::vector<double> worst(5, 0.0);
  std::vector<std::string> where(5);
  for (int point = 0; point < 1000; ++point) {
    const int n = 1 + point % 4;
    const auto g = random_graph(rng, n, 0.1, 5.0);
    Eigen::VectorXd t(n + 1);
    for (int i = 0; i < n; ++i) t(i) = tdist(rng);
    t(n) = 0.0;
    const auto b = static_cast<graph::Vertex>(rng() % n);
    const double r = graph::reroot_residual(g, t, b);
    if (r >= worst[n]) {
      worst[n] = r;
      where[n] = weights_text(g) + " t=" + vector_text(t) + " b=" + g.vertex_name(b);
    }
  }
  std::vector<IdentityCheck> out;
  for (int n = 1; n <= 4; ++n)
    out.push_back(numeric_at_most("rerooting", "max residual over 250 points N=" + std::to_string(n), where[n], 1e-12,
                                  worst[n]));
  return out;
}

std::vector<IdentityCheck> schur_suite(const SuiteOptions& opt) {
  auto rng = suite_rng(opt, "schur");
  std::uniform_real_distribution<double> extra(0.05, 1.0), pdist(-1.0, 1.0);
  struct Worst {
    double value = 0.0;
    std::string where;
  };
  std::vector<Worst> route(7), collapse(7), fd(7);
  auto note = [](Worst& w, double v, const std::string& in) {
    if (v >= w.value) w = {v, in};
  };
  for (int inst = 0; inst < 200; ++inst) {
    const int n = 1 + inst % 6;
    const auto g = random_graph(rng, n, 0.1, 3.0);
    // Diagonally dominant, hence positive definite.
    Eigen::VectorXd beta(n + 1), p(n + 1);
    for (int i = 0; i <= n; ++i) {
      beta(i) = 0.5 * g.weights().row(i).sum() + extra(rng);
      p(i) = pdist(rng);
    }
    const auto h = graph::build_H_beta(g, beta);
    const std::string in = weights_text(g) + " beta=" + vector_text(beta) + " p=" + vector_text(p);
    const auto red = graph::schur_reduce(g, beta, p);

    // Second route: invert H, take the {N, delta} block of the Green's function and invert it back.
    const Eigen::MatrixXd green = h.inverse();
    Eigen::Matrix2d g22;
    g22 << green(n - 1, n - 1), green(n - 1, n), green(n, n - 1), green(n, n);
    const double w_route = -g22.inverse()(0, 1);
    note(route[n], std::abs(red.w_tilde - w_route), in);
    note(collapse[n], std::abs(graph::green_ratio(h, p) - graph::collapsed_ratio(red)), in);

    const Edge e = graph::make_edge(n - 1, g.root());
    const double step = 1e-5;
    const double up = graph::schur_reduce(g.with_weight(e, g.weight(e) + step), beta, p).w_tilde;
    const double down = graph::schur_reduce(g.with_weight(e, g.weight(e) - step), beta, p).w_tilde;
    note(fd[n], std::abs((up - down) / (2.0 * step) - 1.0), in);
  }
  std::vector<IdentityCheck> out;
  for (int n = 1; n <= 6; ++n) {
    const std::string tag = " N=" + std::to_string(n);
    out.push_back(numeric_at_most("schur", "W~ two routes" + tag, route[n].where, 1e-12, route[n].value));
    out.push_back(numeric_at_most("schur", "ratio collapse" + tag, collapse[n].where, 1e-12, collapse[n].value));
    out.push_back(numeric_at_most("schur", "dW~/dW_Nd=1" + tag, fd[n].where, 1e-6, fd[n].value));
  }
  return out;
}

std::vector<IdentityCheck> twopoint_suite(const SuiteOptions&) {
  const std::vector<double> grid{0.25, 0.5, 1.0, 2.0, 4.0};
  std::string grid_text = "W=";
  for (double w : grid) grid_text += format_double(w) + " ";
  std::vector<IdentityCheck> out;
  for (double w : grid) {
    const auto r = integrate::twopoint_law_check(w, [](double) { return 1.0; }, 0.0, 1.0);
    out.push_back(numeric_close("twopoint", "normalization beta-side", "g=1 W=" + format_double(w), 1.0, r.beta_side,
                                1e-6));
    out.push_back(numeric_close("twopoint", "normalization t-side", "g=1 W=" + format_double(w), 1.0, r.t_side, 1e-6));
  }
  for (const auto& probe : integrate::twopoint_probe_bank()) {
    const auto scan = integrate::twopoint_scan(probe, grid);
    const std::string in = probe.name + " p_d=" + format_double(probe.p_delta) + " p_1=" + format_double(probe.p_1) +
                           " " + grid_text;
    out.push_back(numeric_at_most("twopoint", "beta-side=t-side " + probe.name, in, 1e-6, scan.max_residual));
    out.push_back(numeric_at_most("twopoint", "non-increasing " + probe.name, in, 1e-6, scan.max_increase));
  }
  return out;
}

std::vector<IdentityCheck> perspective_suite(const SuiteOptions& opt) {
  std::vector<integrate::JointProbe> bank;
  std::vector<int> dims;
  for (int n = 1; n <= 3; ++n) {
    for (auto& j : integrate::joint_bank(n)) {
      bank.push_back(j);
      dims.push_back(n);
    }
  }
  bank.push_back(integrate::random_convex_quadratic(3, opt.seed));
  dims.push_back(3);

  std::vector<IdentityCheck> out;
  for (std::size_t k = 0; k < bank.size(); ++k) {
    const auto rep = integrate::perspective_convexity_check(bank[k], dims[k], 100000, opt.seed + k);
    const std::string in = bank[k].name + " dim=" + std::to_string(dims[k]) + " samples=100000";
    out.push_back(predicate("perspective", "midpoint convexity " + bank[k].name, in, "0 violations beyond 1e-12",
                            std::to_string(rep.violations) + " violations, max excess " +
                                format_double(rep.max_excess),
                            rep.violations == 0));
    auto eig = numeric_at_most("perspective", "fd Hessian min eigenvalue " + bank[k].name, in, 1e-8,
                               -rep.min_eigenvalue);
    eig.expected = ">= -1e-08";
    eig.got = format_double(rep.min_eigenvalue);
    out.push_back(std::move(eig));
  }
  return out;
}

}  // namespace h22::verify
