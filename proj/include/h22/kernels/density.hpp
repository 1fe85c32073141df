#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "h22/graph/rooted_graph.hpp"

namespace h22::kernels {

inline constexpr int kMaxBulk = 3;
inline constexpr int kMaxEdges = kMaxBulk * (kMaxBulk + 1) / 2;

/// Flattened weights for the batched root-pinned density. Vertex n is the root;
/// edges follow graph::all_edges order.
struct Couplings {
  int n = 0;
  int edge_count = 0;
  std::array<std::array<double, kMaxBulk + 1>, kMaxBulk + 1> w{};
  std::array<std::array<int, 2>, kMaxEdges> edges{};
  double log_norm = 0.0;  // -(n/2) ln(2 pi)
};

/// SizeError when g has more than kMaxBulk bulk vertices.
Couplings make_couplings(const graph::RootedGraph& g);

/// Structure-of-arrays batch. t[k][p] is coordinate k of point p. When `score`
/// is set it receives edge_count rows of `count` values, row e holding
/// d/dW_e log nu_delta at each point.
struct Batch {
  std::array<const double*, kMaxBulk> t{};
  std::size_t count = 0;
  double* density = nullptr;
  double* score = nullptr;
};

void evaluate_scalar(const Couplings& c, const Batch& b);
#if defined(H22_HAVE_AVX2)
void evaluate_avx2(const Couplings& c, const Batch& b);
#endif

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa);
bool avx2_supported();  // compiled in and reported by the CPU
Isa active_isa();
/// Overrides runtime detection; nullopt restores it. PreconditionError when
/// AVX2 is requested but unsupported.
void force_isa(std::optional<Isa> isa);

/// Dispatches to the active variant.
void evaluate(const Couplings& c, const Batch& b);

}  // namespace h22::kernels
