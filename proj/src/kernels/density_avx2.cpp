#include <immintrin.h>

#include <cstdint>

#include "h22/kernels/density.hpp"

namespace h22::kernels {

namespace {

struct V4 {
  __m256d v;
  V4() = default;
  V4(__m256d x) : v(x) {}
  explicit V4(double x) : v(_mm256_set1_pd(x)) {}
  static V4 load(const double* p) { return _mm256_loadu_pd(p); }
  void store(double* p) const { _mm256_storeu_pd(p, v); }
  friend V4 operator+(V4 a, V4 b) { return _mm256_add_pd(a.v, b.v); }
  friend V4 operator-(V4 a, V4 b) { return _mm256_sub_pd(a.v, b.v); }
  friend V4 operator*(V4 a, V4 b) { return _mm256_mul_pd(a.v, b.v); }
  friend V4 operator/(V4 a, V4 b) { return _mm256_div_pd(a.v, b.v); }
};

inline V4 fma(V4 a, V4 b, V4 c) { return _mm256_fmadd_pd(a.v, b.v, c.v); }
inline V4 sqrt(V4 a) { return _mm256_sqrt_pd(a.v); }

// exp via Cody-Waite reduction x = k ln2 + r, |r| <= ln2/2, a degree-13 Taylor
// polynomial for e^r and exponent-field scaling. Underflows to 0 below -708.
V4 exp(V4 x) {
  const __m256d lo_mask = _mm256_cmp_pd(x.v, _mm256_set1_pd(-708.0), _CMP_GE_OQ);
  x = _mm256_max_pd(_mm256_min_pd(x.v, _mm256_set1_pd(709.0)), _mm256_set1_pd(-708.0));
  const V4 k = _mm256_round_pd((x * V4(1.4426950408889634)).v, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  V4 r = fma(k, V4(-6.93147180369123816490e-01), x);
  r = fma(k, V4(-1.90821492927058770002e-10), r);

  static constexpr double inv_fact[] = {1.0 / 6227020800.0, 1.0 / 479001600.0, 1.0 / 39916800.0,
                                        1.0 / 3628800.0,    1.0 / 362880.0,    1.0 / 40320.0,
                                        1.0 / 5040.0,       1.0 / 720.0,       1.0 / 120.0,
                                        1.0 / 24.0,         1.0 / 6.0,         0.5,
                                        1.0,                1.0};
  V4 p(inv_fact[0]);
  for (int i = 1; i < 14; ++i) p = fma(p, r, V4(inv_fact[i]));

  const __m128i ki = _mm256_cvtpd_epi32(k.v);
  __m256i bits = _mm256_cvtepi32_epi64(ki);
  bits = _mm256_slli_epi64(_mm256_add_epi64(bits, _mm256_set1_epi64x(1023)), 52);
  const V4 scaled = p * V4(_mm256_castsi256_pd(bits));
  return _mm256_and_pd(scaled.v, lo_mask);
}

V4 cosh_m1(V4 ea, V4 ra, V4 eb, V4 rb) { return fma(V4(0.5), ea * rb + eb * ra, V4(-1.0)); }

}  // namespace

// Same quantities as evaluate_scalar; the scaled matrix M is inverted through
// its closed-form adjugate.
void evaluate_avx2(const Couplings& c, const Batch& b) {
  const int n = c.n, root = c.n;
  for (std::size_t base = 0; base < b.count; base += 4) {
    const std::size_t lanes = b.count - base < 4 ? b.count - base : 4;
    V4 e[kMaxBulk + 1], r[kMaxBulk + 1];
    for (int k = 0; k < n; ++k) {
      alignas(32) double buf[4] = {0.0, 0.0, 0.0, 0.0};
      for (std::size_t l = 0; l < lanes; ++l) buf[l] = b.t[k][base + l];
      e[k] = exp(V4::load(buf));
      r[k] = V4(1.0) / e[k];
    }
    e[root] = V4(1.0);
    r[root] = V4(1.0);

    V4 energy(0.0);
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) energy = fma(V4(c.w[i][j]), cosh_m1(e[i], r[i], e[j], r[j]), energy);

    V4 d[kMaxBulk];
    for (int i = 0; i < n; ++i) {
      V4 acc(c.w[i][root]);
      for (int j = 0; j < n; ++j)
        if (j != i) acc = fma(V4(c.w[i][j]), e[j], acc);
      d[i] = acc * r[i];
    }

    // inv[i][j] of M with M_ij = -W_ij off the diagonal.
    V4 det, inv[kMaxBulk][kMaxBulk];
    if (n == 1) {
      det = d[0];
      inv[0][0] = V4(1.0) / det;
    } else if (n == 2) {
      const V4 a(c.w[0][1]);
      det = d[0] * d[1] - a * a;
      const V4 s = V4(1.0) / det;
      inv[0][0] = d[1] * s;
      inv[1][1] = d[0] * s;
      inv[0][1] = inv[1][0] = a * s;
    } else {
      const V4 a(c.w[0][1]), bb(c.w[0][2]), cc(c.w[1][2]);
      const V4 c00 = d[1] * d[2] - cc * cc, c11 = d[0] * d[2] - bb * bb, c22 = d[0] * d[1] - a * a;
      const V4 c01 = a * d[2] + bb * cc, c02 = a * cc + bb * d[1], c12 = cc * d[0] + a * bb;
      det = d[0] * c00 - a * c01 - bb * c02;
      const V4 s = V4(1.0) / det;
      inv[0][0] = c00 * s;
      inv[1][1] = c11 * s;
      inv[2][2] = c22 * s;
      inv[0][1] = inv[1][0] = c01 * s;
      inv[0][2] = inv[2][0] = c02 * s;
      inv[1][2] = inv[2][1] = c12 * s;
    }

    alignas(32) double out[4];
    (exp(V4(c.log_norm) - energy) * sqrt(det)).store(out);
    for (std::size_t l = 0; l < lanes; ++l) b.density[base + l] = out[l];

    if (!b.score) continue;
    for (int k = 0; k < c.edge_count; ++k) {
      const int a = c.edges[k][0], z = c.edges[k][1];
      V4 bracket;
      if (z == root) {
        bracket = r[a] * inv[a][a];
      } else {
        bracket = e[z] * r[a] * inv[a][a] + e[a] * r[z] * inv[z][z] - V4(2.0) * inv[a][z];
      }
      (fma(V4(0.5), bracket, V4(0.0) - cosh_m1(e[a], r[a], e[z], r[z]))).store(out);
      for (std::size_t l = 0; l < lanes; ++l) b.score[k * b.count + base + l] = out[l];
    }
  }
}

}  // namespace h22::kernels
