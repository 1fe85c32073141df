#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "h22/errors.hpp"
#include "h22/graph/mixing_density.hpp"
#include "h22/kernels/density.hpp"

using namespace h22;
using kernels::Batch;
using kernels::Couplings;

namespace {

struct Points {
  std::vector<std::vector<double>> axes;
  std::size_t count;
};

Points random_points(std::mt19937_64& rng, int n, std::size_t count, double span) {
  std::uniform_real_distribution<double> u(-span, span);
  Points p{std::vector<std::vector<double>>(n, std::vector<double>(count)), count};
  for (auto& axis : p.axes)
    for (auto& v : axis) v = u(rng);
  return p;
}

struct Result {
  std::vector<double> density, score;
};

Result run(void (*fn)(const Couplings&, const Batch&), const Couplings& c, const Points& pts) {
  Result r{std::vector<double>(pts.count), std::vector<double>(pts.count * c.edge_count)};
  Batch b;
  for (int k = 0; k < c.n; ++k) b.t[k] = pts.axes[k].data();
  b.count = pts.count;
  b.density = r.density.data();
  b.score = r.score.data();
  fn(c, b);
  return r;
}

graph::RootedGraph random_graph(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0.1, 5.0);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) w(i, j) = w(j, i) = u(rng);
  return graph::RootedGraph(w);
}

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + 1e-300; }

}  // namespace

TEST_CASE("scalar kernel agrees with the graph-layer density and score") {
  std::mt19937_64 rng(101);
  for (int n = 1; n <= 3; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      auto g = random_graph(rng, n);
      auto c = kernels::make_couplings(g);
      auto pts = random_points(rng, n, 13, 4.0);
      auto res = run(kernels::evaluate_scalar, c, pts);
      auto edges = graph::all_edges(g);
      REQUIRE(static_cast<int>(edges.size()) == c.edge_count);
      for (std::size_t p = 0; p < pts.count; ++p) {
        Eigen::VectorXd t(n);
        for (int k = 0; k < n; ++k) t(k) = pts.axes[k][p];
        auto full = graph::with_root(t);
        double logd = graph::log_mixing_density(g, full, g.root());
        if (logd > -700.0) CHECK(std::log(res.density[p]) == doctest::Approx(logd).epsilon(1e-11));
        else CHECK(res.density[p] < 1e-300);
        for (int e = 0; e < c.edge_count; ++e) {
          double s = graph::dW_log_density(g, full, g.root(), edges[e]);
          CHECK(res.score[e * pts.count + p] == doctest::Approx(s).epsilon(1e-10).scale(1.0));
        }
      }
    }
  }
}

TEST_CASE("couplings reject graphs beyond the kernel size") {
  CHECK_THROWS_AS(kernels::make_couplings(graph::RootedGraph::uniform(4, 1.0)), SizeError);
}

#if defined(H22_HAVE_AVX2)
TEST_CASE("AVX2 kernel is equivalent to the scalar reference") {
  if (!kernels::avx2_supported()) return;
  std::mt19937_64 rng(202);
  double worst_density = 0.0, worst_score = 0.0;
  for (int n = 1; n <= 3; ++n) {
    for (int rep = 0; rep < 40; ++rep) {
      auto g = random_graph(rng, n);
      auto c = kernels::make_couplings(g);
      std::size_t count = 1 + rep * 7 % 37;  // exercises every tail length
      auto pts = random_points(rng, n, count, rep % 2 ? 12.0 : 3.0);
      auto ref = run(kernels::evaluate_scalar, c, pts);
      auto simd = run(kernels::evaluate_avx2, c, pts);
      for (std::size_t p = 0; p < count; ++p) {
        const double a = ref.density[p], b = simd.density[p];
        if (a > 1e-290) worst_density = std::max(worst_density, std::abs(a - b) / a);
        else CHECK(b <= 1e-290);
        for (int e = 0; e < c.edge_count; ++e) {
          const double sa = ref.score[e * count + p], sb = simd.score[e * count + p];
          // Score magnitudes reach W cosh(24); compare relative to max(1, |s|).
          if (a > 1e-290) worst_score = std::max(worst_score, std::abs(sa - sb) / std::max(1.0, std::abs(sa)));
        }
      }
    }
  }
  CHECK(worst_density <= 1e-12);
  CHECK(worst_score <= 1e-12);
  MESSAGE("max relative density difference " << worst_density << ", score " << worst_score);
}

TEST_CASE("dispatch honours overrides") {
  kernels::force_isa(kernels::Isa::scalar);
  CHECK(kernels::active_isa() == kernels::Isa::scalar);
  kernels::force_isa(std::nullopt);
  CHECK(kernels::active_isa() == (kernels::avx2_supported() ? kernels::Isa::avx2 : kernels::Isa::scalar));
}
#endif

TEST_CASE("dispatched evaluation matches the scalar reference") {
  std::mt19937_64 rng(303);
  auto g = random_graph(rng, 2);
  auto c = kernels::make_couplings(g);
  auto pts = random_points(rng, 2, 9, 2.0);
  auto ref = run(kernels::evaluate_scalar, c, pts);
  auto got = run(kernels::evaluate, c, pts);
  for (std::size_t p = 0; p < pts.count; ++p) CHECK(close(ref.density[p], got.density[p], 1e-12));
}
