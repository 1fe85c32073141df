#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>

#include "h22/graph/rooted_graph.hpp"
#include "h22/kernels/density.hpp"

namespace h22::integrate {

/// Tensor Gauss-Legendre on [-T, T]^N. nodes == 0 selects default_nodes(N).
struct QuadratureSpec {
  double truncation = 12.0;
  int nodes = 0;
};

/// 200 / 160 / 120 nodes per axis for N = 1 / 2 / 3.
int default_nodes(int n);
int resolved_nodes(const QuadratureSpec& spec, int n);

/// A line of grid points along the last axis. `weight` is the tensor quadrature
/// weight; `score` (when requested) holds one row of `count` values per edge.
struct GridBlock {
  int n = 0;
  std::size_t count = 0;
  std::array<const double*, kernels::kMaxBulk> t{};
  const double* weight = nullptr;
  const double* density = nullptr;
  const double* score = nullptr;
};

/// Visits the whole grid block by block. SizeError for N > 3, PreconditionError
/// for an invalid spec.
void for_each_block(const graph::RootedGraph& g, const QuadratureSpec& spec, bool with_score,
                    const std::function<void(const GridBlock&)>& visit);

using TFunction = std::function<double(std::span<const double> t)>;

/// Tensor quadrature of F(t) nu_delta(t) over [-T, T]^N.
double quad_expectation(const graph::RootedGraph& g, const TFunction& f, const QuadratureSpec& spec = {});

}  // namespace h22::integrate
