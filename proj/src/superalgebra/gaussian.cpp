#include "h22/superalgebra/gaussian.hpp"

#include "h22/errors.hpp"

namespace h22::susy {

Rational gaussian_moment(int k, const Rational& w) {
  if (w <= 0) throw PreconditionError("gaussian_moment: weight must be positive");
  if (k % 2 != 0) return 0;
  Rational m = 1;
  for (int j = k - 1; j > 1; j -= 2) m *= j;
  for (int j = 0; j < k / 2; ++j) m /= w;
  return m;
}

SuperNumber fermionic_gaussian_factor(int sites, std::span<const Rational> w) {
  if (static_cast<int>(w.size()) != sites) throw StructuralError("fermionic_gaussian_factor: one weight per site");
  SuperNumber out(sites, Coefficient(1));
  for (int i = 1; i <= sites; ++i) {
    SuperNumber pair = SuperNumber::xi(sites, i) * SuperNumber::eta(sites, i);
    out = out * (SuperNumber(sites, Coefficient(1)) - Coefficient(w[i - 1]) * pair);
  }
  return out;
}

Rational bosonic_gaussian_integrate(const Polynomial& p, std::span<const Rational> w) {
  if (p.has_r()) throw PreconditionError("bosonic_gaussian_integrate: coefficient depends on r");
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational v = c;
    for (int site = 1; site <= kMaxSites; ++site) {
      int ex = m[x_var(site)];
      int ey = m[y_var(site)];
      if (site > static_cast<int>(w.size())) {
        if (ex != 0 || ey != 0) throw StructuralError("bosonic_gaussian_integrate: variable beyond the weight vector");
        continue;
      }
      const Rational& ws = w[site - 1];
      // (1/2pi) * (2pi / w) * E[x^ex] E[y^ey]
      v *= gaussian_moment(ex, ws) * gaussian_moment(ey, ws) / ws;
      if (v == 0) break;
    }
    total += v;
  }
  return total;
}

Rational gaussian_flat_integrate(const SuperNumber& a, std::span<const Rational> w, BerezinOrder order) {
  if (static_cast<int>(w.size()) != a.sites()) throw StructuralError("gaussian_flat_integrate: one weight per site");
  for (const auto& [m, c] : a.terms())
    if (!c.is_plain_polynomial())
      throw PreconditionError("gaussian_flat_integrate: coefficient " + c.to_string() + " is not a polynomial in x, y");
  Coefficient top = berezin_all(a, order);
  return bosonic_gaussian_integrate(top.numerator(), w);
}

Rational fermionic_gaussian_integral(const std::vector<std::vector<Rational>>& sigma, BerezinOrder order) {
  const int n = static_cast<int>(sigma.size());
  SuperNumber form(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(sigma[i].size()) != n) throw StructuralError("fermionic_gaussian_integral: matrix is not square");
    for (int j = 0; j < n; ++j)
      form += Coefficient(sigma[i][j]) * (SuperNumber::xi(n, i + 1) * SuperNumber::eta(n, j + 1));
  }
  Coefficient top = berezin_all(exp_nilpotent(-form), order);
  return top.numerator().constant_term();
}

}  // namespace h22::susy
