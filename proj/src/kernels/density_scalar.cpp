#include <cmath>
#include <numbers>
#include <utility>

#include "h22/errors.hpp"
#include "h22/kernels/density.hpp"

namespace h22::kernels {

Couplings make_couplings(const graph::RootedGraph& g) {
  if (g.n() > kMaxBulk) throw SizeError("batched density supports at most 3 non-root vertices");
  Couplings c;
  c.n = g.n();
  for (int i = 0; i <= c.n; ++i)
    for (int j = 0; j <= c.n; ++j) c.w[i][j] = i == j ? 0.0 : g.weight(i, j);
  for (auto e : graph::all_edges(g)) c.edges[c.edge_count++] = {static_cast<int>(e.a), static_cast<int>(e.b)};
  c.log_norm = -0.5 * c.n * std::log(2.0 * std::numbers::pi);
  return c;
}

namespace {

// In-place Gauss-Jordan with partial pivoting; returns det(a), leaves a^{-1} in inv.
double invert(int n, double a[kMaxBulk][kMaxBulk], double inv[kMaxBulk][kMaxBulk]) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = i == j ? 1.0 : 0.0;
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (a[piv][col] == 0.0) return 0.0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a[piv][j], a[col][j]);
        std::swap(inv[piv][j], inv[col][j]);
      }
      det = -det;
    }
    const double p = a[col][col];
    det *= p;
    for (int j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return det;
}

}  // namespace

// With E = diag(e^{t}), the Laplacian is E M E where M_ij = -W_ij and
// M_ii = e^{-t_i} (W_id + sum_j W_ij e^{t_j}), so sqrt(D_W) e^{-sum t} = sqrt(det M).
void evaluate_scalar(const Couplings& c, const Batch& b) {
  const int n = c.n, root = c.n;
  for (std::size_t p = 0; p < b.count; ++p) {
    double t[kMaxBulk + 1] = {};
    for (int k = 0; k < n; ++k) t[k] = b.t[k][p];

    double energy = 0.0;
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) energy += c.w[i][j] * (std::cosh(t[i] - t[j]) - 1.0);

    double m[kMaxBulk][kMaxBulk], inv[kMaxBulk][kMaxBulk];
    for (int i = 0; i < n; ++i) {
      double diag = c.w[i][root];
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        diag += c.w[i][j] * std::exp(t[j]);
        m[i][j] = -c.w[i][j];
      }
      m[i][i] = diag * std::exp(-t[i]);
    }
    const double det = invert(n, m, inv);
    b.density[p] = std::exp(c.log_norm - energy) * std::sqrt(det);

    if (!b.score) continue;
    for (int e = 0; e < c.edge_count; ++e) {
      const int a = c.edges[e][0], z = c.edges[e][1];
      double bracket;
      if (z == root) {
        bracket = std::exp(-t[a]) * inv[a][a];
      } else {
        bracket = std::exp(t[z] - t[a]) * inv[a][a] + std::exp(t[a] - t[z]) * inv[z][z] - 2.0 * inv[a][z];
      }
      b.score[e * b.count + p] = -(std::cosh(t[a] - t[z]) - 1.0) + 0.5 * bracket;
    }
  }
}

}  // namespace h22::kernels
