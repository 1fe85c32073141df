#include "h22/superalgebra/operators.hpp"

#include "h22/errors.hpp"

namespace h22::susy {

SuperNumber fermion_derive_left(const SuperNumber& a, FermionIndex g) {
  SuperNumber out(a.sites());
  const std::uint32_t bit = 1u << g.ordinal();
  for (const auto& [m, c] : a.terms()) {
    if ((m.bits() & bit) == 0) continue;
    int below = std::popcount(m.bits() & (bit - 1u));
    out += SuperNumber::term(a.sites(), FermionMonomial(m.bits() & ~bit), (below & 1) ? -c : c);
  }
  return out;
}

SuperNumber berezin_pair(const SuperNumber& a, int site, BerezinOrder order) {
  if (order == BerezinOrder::eta_inner) return fermion_derive_left(fermion_derive_left(a, eta_idx(site)), xi_idx(site));
  return fermion_derive_left(fermion_derive_left(a, xi_idx(site)), eta_idx(site));
}

Coefficient berezin_all(const SuperNumber& a, BerezinOrder order) {
  SuperNumber cur = a;
  for (int site = a.sites(); site >= 1; --site) cur = berezin_pair(cur, site, order);
  return cur.body();
}

SuperNumber boson_derive(const SuperNumber& a, BosonVar v) {
  if (v.kind == BosonKind::r) throw DomainError("boson_derive: r_i is not an independent variable");
  if (v.site < 1 || v.site > a.sites()) throw StructuralError("boson_derive: site out of range");
  SuperNumber out(a.sites());
  for (const auto& [m, c] : a.terms()) out += SuperNumber::term(a.sites(), m, c.derivative(v));
  return out;
}

SuperNumber apply_Q(const SuperNumber& a) {
  const int n = a.sites();
  SuperNumber out(n);
  for (int i = 1; i <= n; ++i) {
    out += SuperNumber::xi(n, i) * boson_derive(a, x_var(i));
    out += SuperNumber::eta(n, i) * boson_derive(a, y_var(i));
    out += SuperNumber::boson(n, x_var(i)) * fermion_derive_left(a, eta_idx(i));
    out -= SuperNumber::boson(n, y_var(i)) * fermion_derive_left(a, xi_idx(i));
  }
  return out;
}

SuperNumber rotation_generator(const SuperNumber& a) {
  const int n = a.sites();
  SuperNumber out(n);
  for (int i = 1; i <= n; ++i) {
    out += SuperNumber::boson(n, x_var(i)) * boson_derive(a, y_var(i));
    out -= SuperNumber::boson(n, y_var(i)) * boson_derive(a, x_var(i));
    out += SuperNumber::xi(n, i) * fermion_derive_left(a, eta_idx(i));
    out -= SuperNumber::eta(n, i) * fermion_derive_left(a, xi_idx(i));
  }
  return out;
}

SuperNumber build_z(int sites, int site) {
  SuperNumber xe = SuperNumber::xi(sites, site) * SuperNumber::eta(sites, site);
  return SuperNumber::boson(sites, r_var(site)) + Coefficient::inv_r(site) * xe;
}

SuperNumber build_H(int sites, int site) {
  auto x = SuperNumber::boson(sites, x_var(site));
  auto y = SuperNumber::boson(sites, y_var(site));
  auto xe = SuperNumber::xi(sites, site) * SuperNumber::eta(sites, site);
  return x * x + y * y + Coefficient(2) * xe;
}

SuperNumber build_lambda(int sites, int site) {
  return SuperNumber::boson(sites, x_var(site)) * SuperNumber::eta(sites, site) -
         SuperNumber::boson(sites, y_var(site)) * SuperNumber::xi(sites, site);
}

SuperNumber inner_product(int sites, int i, int j) {
  auto b = [&](BosonVar v) { return SuperNumber::boson(sites, v); };
  return b(x_var(i)) * b(x_var(j)) + b(y_var(i)) * b(y_var(j)) - build_z(sites, i) * build_z(sites, j) +
         SuperNumber::xi(sites, i) * SuperNumber::eta(sites, j) + SuperNumber::xi(sites, j) * SuperNumber::eta(sites, i);
}

SuperNumber invert_even(const SuperNumber& a) {
  auto p = a.parity();
  if (!p || *p != 0) throw DomainError("invert_even: element is not even");
  Coefficient body = a.body();
  if (body.is_zero()) throw DomainError("invert_even: body is zero");
  Coefficient body_inv = body.inverse();
  SuperNumber soul = a - SuperNumber(a.sites(), body);
  // a = body (1 + u) with u = soul / body nilpotent.
  SuperNumber u = body_inv * soul;
  SuperNumber term(a.sites(), Coefficient(1));
  SuperNumber sum = term;
  while (true) {
    term = -(term * u);
    if (term.is_zero()) break;
    sum += term;
  }
  return body_inv * sum;
}

SuperNumber exp_nilpotent(const SuperNumber& a) {
  auto p = a.parity();
  if (!p || *p != 0) throw DomainError("exp_nilpotent: element is not even");
  if (!a.body().is_zero()) throw DomainError("exp_nilpotent: element has a nonzero body");
  SuperNumber term(a.sites(), Coefficient(1));
  SuperNumber sum = term;
  for (int k = 1;; ++k) {
    term = Coefficient(Rational(1, k)) * (term * a);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

}  // namespace h22::susy
