#include "h22/integrate/quadrature.hpp"

#include <cmath>
#include <vector>

#include "h22/errors.hpp"
#include "h22/integrate/gauss_legendre.hpp"

namespace h22::integrate {

int default_nodes(int n) {
  switch (n) {
    case 1: return 200;
    case 2: return 160;
    default: return 120;
  }
}

int resolved_nodes(const QuadratureSpec& spec, int n) { return spec.nodes > 0 ? spec.nodes : default_nodes(n); }

void for_each_block(const graph::RootedGraph& g, const QuadratureSpec& spec, bool with_score,
                    const std::function<void(const GridBlock&)>& visit) {
  const int n = g.n();
  if (n > kernels::kMaxBulk) throw SizeError("quadrature backend supports N <= 3");
  if (!(spec.truncation > 0.0) || !std::isfinite(spec.truncation)) throw PreconditionError("truncation must be positive");
  if (spec.nodes != 0 && spec.nodes < 2) throw PreconditionError("at least 2 nodes per axis");

  const int m = resolved_nodes(spec, n);
  const Rule rule = gauss_legendre(m, -spec.truncation, spec.truncation);
  const auto couplings = kernels::make_couplings(g);
  const auto count = static_cast<std::size_t>(m);

  std::vector<std::vector<double>> axes(n, std::vector<double>(count));
  std::vector<double> weight(count), density(count), score(with_score ? count * couplings.edge_count : 0);
  axes[n - 1] = rule.nodes;

  kernels::Batch batch;
  GridBlock block;
  block.n = n;
  block.count = count;
  for (int k = 0; k < n; ++k) batch.t[k] = block.t[k] = axes[k].data();
  batch.count = count;
  batch.density = density.data();
  batch.score = with_score ? score.data() : nullptr;
  block.weight = weight.data();
  block.density = density.data();
  block.score = batch.score;

  // Odometer over the outer axes 0..n-2.
  std::vector<int> idx(n > 1 ? n - 1 : 0, 0);
  while (true) {
    double outer_w = 1.0;
    for (int k = 0; k + 1 < n; ++k) {
      std::fill(axes[k].begin(), axes[k].end(), rule.nodes[idx[k]]);
      outer_w *= rule.weights[idx[k]];
    }
    for (std::size_t p = 0; p < count; ++p) weight[p] = outer_w * rule.weights[p];
    kernels::evaluate(couplings, batch);
    visit(block);

    int k = n - 2;
    while (k >= 0 && ++idx[k] == m) idx[k--] = 0;
    if (k < 0) break;
  }
}

double quad_expectation(const graph::RootedGraph& g, const TFunction& f, const QuadratureSpec& spec) {
  double sum = 0.0;
  std::vector<double> point(g.n());
  for_each_block(g, spec, false, [&](const GridBlock& b) {
    for (std::size_t p = 0; p < b.count; ++p) {
      if (b.density[p] == 0.0) continue;
      for (int k = 0; k < b.n; ++k) point[k] = b.t[k][p];
      sum += b.weight[p] * b.density[p] * f(point);
    }
  });
  return sum;
}

}  // namespace h22::integrate
