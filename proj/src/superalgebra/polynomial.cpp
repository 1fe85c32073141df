#include "h22/superalgebra/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace h22::susy {

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps) d += e;
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t k = 0; k < m.exps.size(); ++k) m.exps[k] = static_cast<std::uint8_t>(a.exps[k] + b.exps[k]);
  return m;
}

namespace {

// Rewrites c * m with r_i^2 -> 1 + x_i^2 + y_i^2 until every r exponent is <= 1.
void reduce_into(Polynomial::Terms& out, Monomial m, const Rational& c) {
  for (int site = 1; site <= kMaxSites; ++site) {
    auto r = r_var(site);
    if (m[r] >= 2) {
      m[r] = static_cast<std::uint8_t>(m[r] - 2);
      Monomial mx = m, my = m;
      mx[x_var(site)] = static_cast<std::uint8_t>(mx[x_var(site)] + 2);
      my[y_var(site)] = static_cast<std::uint8_t>(my[y_var(site)] + 2);
      reduce_into(out, m, c);
      reduce_into(out, mx, c);
      reduce_into(out, my, c);
      return;
    }
  }
  auto [it, inserted] = out.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

// Exact division by x_site^2 + (1 + y_site^2) or x_site^2 + y_site^2.
std::optional<Polynomial> divide_by_quadratic(const Polynomial& p, int site, bool plus_one) {
  Polynomial rem = p;
  Polynomial quot;
  const auto xv = x_var(site);
  Polynomial q = Polynomial::var(xv) * Polynomial::var(xv) + Polynomial::var(y_var(site)) * Polynomial::var(y_var(site));
  if (plus_one) q += Polynomial(1);
  while (true) {
    const Monomial* lead = nullptr;
    Rational lead_c;
    for (const auto& [m, c] : rem.terms()) {
      if (m[xv] >= 2 && (lead == nullptr || m[xv] > (*lead)[xv])) {
        lead = &m;
        lead_c = c;
      }
    }
    if (lead == nullptr) break;
    Monomial shifted = *lead;
    shifted[xv] = static_cast<std::uint8_t>(shifted[xv] - 2);
    Polynomial t = Polynomial::term(lead_c, shifted);
    quot += t;
    rem -= t * q;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::var(BosonVar v) {
  Monomial m;
  m[v] = 1;
  return term(Rational(1), m);
}

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
  Polynomial p;
  if (c != 0) reduce_into(p.terms_, m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::depends_on(BosonVar v) const {
  for (const auto& [m, c] : terms_)
    if (m[v] != 0) return true;
  return false;
}

bool Polynomial::has_r() const {
  for (int site = 1; site <= kMaxSites; ++site)
    if (depends_on(r_var(site))) return true;
  return false;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) reduce_into(out.terms_, ma * mb, Rational(ca * cb));
  return out;
}

Polynomial Polynomial::explicit_derivative(BosonVar v) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    auto e = m[v];
    if (e == 0) continue;
    Monomial d = m;
    d[v] = static_cast<std::uint8_t>(e - 1);
    out.add_term(d, c * e);
  }
  return out;
}

std::pair<Polynomial, Polynomial> Polynomial::split_r(int site) const {
  Polynomial a, b;
  const auto rv = r_var(site);
  for (const auto& [m, c] : terms_) {
    if (m[rv] == 0) {
      a.add_term(m, c);
    } else {
      Monomial d = m;
      d[rv] = 0;
      b.add_term(d, c);
    }
  }
  return {a, b};
}

std::optional<Polynomial> Polynomial::divide_by_r(int site) const {
  // a + b r = r (b + (a / s) r) with s = r^2 = 1 + x^2 + y^2.
  auto [a, b] = split_r(site);
  auto q = divide_by_quadratic(a, site, true);
  if (!q) return std::nullopt;
  return b + *q * var(r_var(site));
}

std::optional<Polynomial> Polynomial::divide_by_one_plus_r(int site) const {
  // a + b r = (1 + r)(c + d r)  <=>  a - b = d (x^2 + y^2), c = b - d.
  auto [a, b] = split_r(site);
  auto d = divide_by_quadratic(a - b, site, false);
  if (!d) return std::nullopt;
  return (b - *d) + *d * var(r_var(site));
}

std::string monomial_to_string(const Monomial& m) {
  static constexpr const char* names[] = {"x", "y", "r"};
  std::ostringstream os;
  bool first = true;
  for (int site = 1; site <= kMaxSites; ++site) {
    for (int k = 0; k < 3; ++k) {
      auto e = m.exps[3 * (site - 1) + k];
      if (e == 0) continue;
      if (!first) os << '*';
      first = false;
      os << names[k] << site;
      if (e > 1) os << '^' << static_cast<int>(e);
    }
  }
  return first ? "1" : os.str();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  // Highest degree first, then by exponent vector, for stable golden output.
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    if (l.first.degree() != r.first.degree()) return l.first.degree() > r.first.degree();
    return l.first.exps > r.first.exps;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << monomial_to_string(m);
    }
  }
  return os.str();
}

}  // namespace h22::susy
