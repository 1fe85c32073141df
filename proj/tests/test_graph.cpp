#include <doctest.h>

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <set>

#include "h22/errors.hpp"
#include "h22/graph/graph_io.hpp"
#include "h22/graph/mixing_density.hpp"
#include "h22/graph/schrodinger.hpp"
#include "h22/graph/spanning_trees.hpp"

using namespace h22::graph;

namespace {

RootedGraph random_graph(std::mt19937_64& rng, int n, double lo = 0.1, double hi = 5.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) w(i, j) = w(j, i) = u(rng);
  return RootedGraph(w);
}

Eigen::VectorXd random_t(std::mt19937_64& rng, int n, double span = 3.0) {
  std::uniform_real_distribution<double> u(-span, span);
  Eigen::VectorXd t(n);
  for (int i = 0; i < n; ++i) t(i) = u(rng);
  return t;
}

RootedGraph two_point(double w) { return RootedGraph::uniform(1, w); }

}  // namespace

TEST_CASE("spanning tree enumeration matches Cayley's count") {
  CHECK(enumerate_spanning_trees(2).size() == 1);
  CHECK(enumerate_spanning_trees(2)[0].edges == std::vector<Edge>{{0, 1}});
  CHECK(enumerate_spanning_trees(3).size() == 3);
  CHECK(enumerate_spanning_trees(5).size() == 125);
  CHECK(enumerate_spanning_trees(8).size() == 262144);
  CHECK_THROWS_AS(enumerate_spanning_trees(1), h22::SizeError);
  CHECK_THROWS_AS(enumerate_spanning_trees(9), h22::SizeError);
}

TEST_CASE("every enumerated tree is distinct, acyclic and spanning") {
  for (int m = 2; m <= 6; ++m) {
    auto trees = enumerate_spanning_trees(m);
    std::set<std::vector<std::pair<std::size_t, std::size_t>>> keys;
    for (const auto& tree : trees) {
      REQUIRE(tree.edges.size() == static_cast<std::size_t>(m - 1));
      std::vector<int> parent(m);
      for (int v = 0; v < m; ++v) parent[v] = v;
      auto find = [&](int v) {
        while (parent[v] != v) v = parent[v];
        return v;
      };
      std::vector<std::pair<std::size_t, std::size_t>> key;
      for (auto e : tree.edges) {
        int ra = find(static_cast<int>(e.a)), rb = find(static_cast<int>(e.b));
        CHECK(ra != rb);
        parent[ra] = rb;
        key.emplace_back(e.a, e.b);
      }
      std::sort(key.begin(), key.end());
      keys.insert(key);
    }
    CHECK(keys.size() == trees.size());
  }
}

TEST_CASE("tree polynomial: small cases") {
  Eigen::VectorXd t0 = Eigen::VectorXd::Zero(1);
  CHECK(d_w_trees(two_point(1.7), t0) == doctest::Approx(1.7));

  Eigen::MatrixXd w(3, 3);
  w << 0, 2, 3, 2, 0, 5, 3, 5, 0;  // W12 = 2, W1d = 3, W2d = 5
  RootedGraph g(w);
  Eigen::VectorXd z = Eigen::VectorXd::Zero(2);
  CHECK(d_w_trees(g, z) == doctest::Approx(3.0 * 5.0 + 2.0 * 3.0 + 2.0 * 5.0));
  CHECK(d_w_det(g, z) == doctest::Approx(31.0));
}

TEST_CASE("matrix-tree: determinant equals tree sum on 200 random instances") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick_n(1, 5);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    int n = pick_n(rng);
    auto g = random_graph(rng, n);
    auto t = random_t(rng, n);
    double trees = d_w_trees(g, t), det = d_w_det(g, t);
    worst = std::max(worst, std::abs(trees - det) / trees);
    CHECK(std::exp(log_d_w(g, with_root(t))) == doctest::Approx(trees).epsilon(1e-10));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("laplacian structure") {
  Eigen::VectorXd t1(1);
  t1 << 0.4;
  auto l1 = laplacian(two_point(2.0), t1);
  REQUIRE(l1.rows() == 1);
  CHECK(l1(0, 0) == doctest::Approx(2.0 * std::exp(0.4)));

  Eigen::Matrix2d expect;
  expect << 2, -1, -1, 2;
  CHECK(laplacian(RootedGraph::uniform(2, 1.0), Eigen::VectorXd::Zero(2)).isApprox(expect));

  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    int n = 1 + k % 5;
    auto g = random_graph(rng, n);
    auto t = random_t(rng, n);
    auto l = laplacian(g, t);
    for (int i = 0; i < n; ++i) {
      CHECK(l.row(i).sum() == doctest::Approx(g.weight(i, g.root()) * std::exp(t(i))).epsilon(1e-12));
      CHECK(l.row(i).sum() > 0.0);
      for (int j = 0; j < n; ++j)
        if (i != j) CHECK(l(i, j) <= 0.0);
    }
  }
}

TEST_CASE("effective action and pinned density") {
  Eigen::VectorXd t0 = Eigen::VectorXd::Zero(1);
  CHECK(effective_action(two_point(1.0), t0) == doctest::Approx(0.0));
  CHECK(effective_action(two_point(3.0), t0) == doctest::Approx(-0.5 * std::log(3.0)));

  Eigen::Vector2d full(0.0, 0.0);
  CHECK(log_mixing_density(two_point(1.0), full, 1) == doctest::Approx(std::log(1.0 / std::sqrt(2.0 * std::numbers::pi))));

  std::mt19937_64 rng(3);
  for (int k = 0; k < 30; ++k) {
    int n = 1 + k % 4;
    auto g = random_graph(rng, n);
    auto t = random_t(rng, n);
    double lhs = log_mixing_density(g, with_root(t), g.root());
    double rhs = -effective_action(g, t) - 0.5 * n * std::log(2.0 * std::numbers::pi);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }

  Eigen::Vector2d bad(0.3, 0.1);
  CHECK_THROWS_AS(log_mixing_density(two_point(1.0), bad, 1), h22::PreconditionError);
}

TEST_CASE("N = 1 density matches the explicit two-point law") {
  // nu_delta(t) = sqrt(W / 2 pi) e^{-W (cosh t - 1)} e^{-t/2}
  for (double w : {0.5, 1.0, 2.0}) {
    for (double t : {-4.0, -1.0, 0.0, 0.7, 3.0}) {
      Eigen::Vector2d full(t, 0.0);
      double expect = 0.5 * std::log(w / (2.0 * std::numbers::pi)) - w * (std::cosh(t) - 1.0) - 0.5 * t;
      CHECK(log_mixing_density(two_point(w), full, 1) == doctest::Approx(expect).epsilon(1e-13));
    }
  }
}

TEST_CASE("W-score equals a centred finite difference of the log density") {
  Eigen::Vector2d full(0.8, 0.0);
  CHECK(dW_log_density(two_point(1.5), full, 1, {0, 1}) == doctest::Approx(-(std::cosh(0.8) - 1.0) + 1.0 / 3.0));

  std::mt19937_64 rng(21);
  for (int k = 0; k < 60; ++k) {
    int n = 1 + k % 4;
    auto g = random_graph(rng, n);
    Eigen::VectorXd full_t = with_root(random_t(rng, n, 2.0));
    std::uniform_int_distribution<int> pick(0, n);
    Vertex i0 = static_cast<Vertex>(pick(rng));
    full_t = full_t.array() - full_t(i0);
    full_t(i0) = 0.0;
    for (auto e : all_edges(g)) {
      double w = g.weight(e), h = 1e-5 * std::max(1.0, w);
      double fd = (log_mixing_density(g.with_weight(e, w + h), full_t, i0) -
                   log_mixing_density(g.with_weight(e, w - h), full_t, i0)) / (2.0 * h);
      CHECK(std::abs(dW_log_density(g, full_t, i0, e) - fd) <= 1e-8 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST_CASE("rerooting identity holds pointwise") {
  std::mt19937_64 rng(5);
  auto g = random_graph(rng, 3);
  CHECK(reroot_residual(g, with_root(random_t(rng, 3)), g.root()) == 0.0);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    int n = 1 + k % 5;
    auto gk = random_graph(rng, n);
    auto full = with_root(random_t(rng, n));
    for (Vertex b = 0; b < static_cast<Vertex>(n); ++b) worst = std::max(worst, reroot_residual(gk, full, b));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("H_beta and the two-point density") {
  Eigen::Vector2d beta(1.0, 1.0);
  Eigen::Matrix2d expect;
  expect << 2, -1, -1, 2;
  auto g = two_point(1.0);
  CHECK(build_H_beta(g, beta).isApprox(expect));

  Eigen::Vector2d b2(0.3, 1.7);
  auto g2 = two_point(1.4);
  CHECK(build_H_beta(g2, b2).determinant() == doctest::Approx(4 * 0.3 * 1.7 - 1.4 * 1.4));
  CHECK(is_positive_definite(build_H_beta(g2, b2)) == (4 * 0.3 * 1.7 > 1.4 * 1.4));
  CHECK_FALSE(is_positive_definite(build_H_beta(g2, Eigen::Vector2d(0.1, 0.1))));

  CHECK(q_density_2pt(1.0, 0.1, 0.1) == 0.0);
  CHECK(q_density_2pt_shifted(1.4, 0.3, 0.5) == doctest::Approx(q_density_2pt(1.4, 0.3, 1.4 * 1.4 / 1.2 + 0.5)).epsilon(1e-13));
  CHECK(q_density_2pt_shifted(1.4, 0.3, 0.0) == 0.0);
  CHECK(q_density_2pt(1.0, -1.0, -1.0) == 0.0);

  Eigen::VectorXd p(2);
  p << 1.0, 0.0;
  CHECK(green_ratio(build_H_beta(g2, b2), p) == doctest::Approx(1.4 / (2 * 0.3)));
}

TEST_CASE("two-point density integrates to one") {
  using boost::math::quadrature::gauss_kronrod;
  for (double w : {0.25, 1.0, 3.0}) {
    // beta1 = v^2, betad = W^2 / (4 v^2) + u^2; Jacobian 4 u v.
    auto outer = [w](double v) {
      auto inner = [w, v](double u) {
        if (u == 0.0 || v == 0.0) return 0.0;
        return q_density_2pt(w, v * v, w * w / (4 * v * v) + u * u) * 4.0 * u * v;
      };
      return gauss_kronrod<double, 31>::integrate(inner, 0.0, std::numeric_limits<double>::infinity(), 8, 1e-11);
    };
    double total = gauss_kronrod<double, 31>::integrate(outer, 0.0, std::numeric_limits<double>::infinity(), 8, 1e-10);
    CHECK(std::abs(total - 1.0) <= 1e-6);
  }
}

TEST_CASE("Schur reduction") {
  SUBCASE("empty bulk leaves the two-point graph unchanged") {
    auto g = two_point(1.3);
    Eigen::VectorXd beta(2), p(2);
    beta << 1.0, 2.0;
    p << 0.4, -0.2;
    auto red = schur_reduce(g, beta, p);
    CHECK(red.w_tilde == 1.3);
    CHECK(red.p_tilde_n == 0.4);
    CHECK(red.p_tilde_delta == -0.2);
  }
  SUBCASE("collapse and unit sensitivity on random positive-definite H_beta") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> margin(0.05, 2.0), coef(-2.0, 2.0);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      int n = 2 + k % 4;
      auto g = random_graph(rng, n);
      Eigen::VectorXd beta(n + 1), p(n + 1);
      for (int i = 0; i <= n; ++i) {
        beta(i) = 0.5 * (g.weights().row(i).sum() + margin(rng));
        p(i) = coef(rng);
      }
      auto h = build_H_beta(g, beta);
      REQUIRE(is_positive_definite(h));
      auto red = schur_reduce(g, beta, p);
      worst = std::max(worst, std::abs(green_ratio(h, p) - collapsed_ratio(red)));

      Edge nd{static_cast<Vertex>(n - 1), g.root()};
      double w = g.weight(nd), step = 1e-6;
      double up = schur_reduce(g.with_weight(nd, w + step), beta, p).w_tilde;
      double dn = schur_reduce(g.with_weight(nd, w - step), beta, p).w_tilde;
      CHECK((up - dn) / (2 * step) == doctest::Approx(1.0).epsilon(1e-8));
    }
    CHECK(worst <= 1e-12);
  }
  SUBCASE("singular bulk block") {
    Eigen::MatrixXd w = Eigen::MatrixXd::Constant(3, 3, 1.0);
    RootedGraph g(w);
    Eigen::VectorXd beta(3), p = Eigen::VectorXd::Zero(3);
    beta << 0.0, 1.0, 1.0;
    CHECK_THROWS_AS(schur_reduce(g, beta, p), h22::LinearAlgebraError);
  }
}

TEST_CASE("graph validation") {
  Eigen::MatrixXd asym(2, 2);
  asym << 0, 1, 2, 0;
  CHECK_THROWS_AS(RootedGraph{asym}, h22::PreconditionError);
  Eigen::MatrixXd neg(2, 2);
  neg << 0, -1, -1, 0;
  CHECK_THROWS_AS(RootedGraph{neg}, h22::PreconditionError);
  Eigen::MatrixXd split = Eigen::MatrixXd::Zero(3, 3);
  split(0, 1) = split(1, 0) = 1.0;
  CHECK_THROWS_AS(RootedGraph{split}, h22::PreconditionError);
  CHECK_THROWS_AS(RootedGraph{Eigen::MatrixXd::Zero(1, 1)}, h22::SizeError);

  Eigen::MatrixXd path = Eigen::MatrixXd::Zero(3, 3);
  path(0, 1) = path(1, 0) = 1.0;
  path(1, 2) = path(2, 1) = 2.0;
  RootedGraph sparse(path);
  CHECK(d_w_det(sparse, Eigen::VectorXd::Zero(2)) == doctest::Approx(2.0));
}

TEST_CASE("graph file format") {
  auto g = parse_graph("# triangle\nn 2\nw 1 2 0.5\nw 1 d 1.5   # boundary\nw 2 d 2\n");
  CHECK(g.n() == 2);
  CHECK(g.weight(0, 1) == 0.5);
  CHECK(g.weight(0, 2) == 1.5);
  CHECK(g.weight(2, 1) == 2.0);
  auto back = parse_graph(to_text(g));
  CHECK(back.weights() == g.weights());

  CHECK_THROWS_AS(parse_graph("w 1 d 1\n"), h22::ConfigError);
  CHECK_THROWS_AS(parse_graph("n 1\nw 1 d 1\nw d 1 2\n"), h22::ConfigError);
  CHECK_THROWS_AS(parse_graph("n 1\nw 1 1 1\n"), h22::ConfigError);
  CHECK_THROWS_AS(parse_graph("n 1\nw 1 3 1\n"), h22::ConfigError);
  CHECK_THROWS_AS(parse_graph("n 1\nw 1 d -1\n"), h22::ConfigError);
  CHECK_THROWS_AS(parse_graph("n 1\nw 1 d abc\n"), h22::ConfigError);
  CHECK_THROWS_AS(parse_graph("n 2\nw 1 d 1\n"), h22::ConfigError);
  CHECK_THROWS_AS(parse_graph("n 1\nq 1\n"), h22::ConfigError);
  CHECK_THROWS_AS(load_graph("/nonexistent/graph.txt"), h22::FileError);
}
