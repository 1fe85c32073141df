#include "h22/superalgebra/coefficient.hpp"

#include <algorithm>
#include <sstream>

#include "h22/errors.hpp"

namespace h22::susy {

bool Denominator::is_one() const {
  for (int k = 0; k < kMaxSites; ++k)
    if (r[k] != 0 || one_plus_r[k] != 0) return false;
  return true;
}

namespace {

Polynomial r_power(int site, int e) {
  Polynomial p(1);
  for (int k = 0; k < e; ++k) p = p * Polynomial::var(r_var(site));
  return p;
}

Polynomial one_plus_r_power(int site, int e) {
  Polynomial p(1);
  Polynomial f = Polynomial(1) + Polynomial::var(r_var(site));
  for (int k = 0; k < e; ++k) p = p * f;
  return p;
}

// Polynomial factor lifting a fraction over `from` to the common denominator `to`.
Polynomial lift(const Denominator& from, const Denominator& to) {
  Polynomial p(1);
  for (int k = 0; k < kMaxSites; ++k) {
    p = p * r_power(k + 1, to.r[k] - from.r[k]);
    p = p * one_plus_r_power(k + 1, to.one_plus_r[k] - from.one_plus_r[k]);
  }
  return p;
}

Denominator lcm(const Denominator& a, const Denominator& b) {
  Denominator d;
  for (int k = 0; k < kMaxSites; ++k) {
    d.r[k] = std::max(a.r[k], b.r[k]);
    d.one_plus_r[k] = std::max(a.one_plus_r[k], b.one_plus_r[k]);
  }
  return d;
}

}  // namespace

Polynomial denominator_polynomial(const Denominator& d) { return lift(Denominator{}, d); }

Coefficient::Coefficient(const Polynomial& num) : num_(num) {}

Coefficient::Coefficient(Polynomial num, const Denominator& den) : num_(std::move(num)), den_(den) { cancel(); }

Coefficient Coefficient::inv_r(int site) {
  Denominator d;
  d.r[site - 1] = 1;
  return Coefficient(Polynomial(1), d);
}

Coefficient Coefficient::inv_one_plus_r(int site) {
  Denominator d;
  d.one_plus_r[site - 1] = 1;
  return Coefficient(Polynomial(1), d);
}

void Coefficient::cancel() {
  if (num_.is_zero()) {
    den_ = Denominator{};
    return;
  }
  for (int k = 0; k < kMaxSites; ++k) {
    while (den_.r[k] > 0) {
      auto q = num_.divide_by_r(k + 1);
      if (!q) break;
      num_ = std::move(*q);
      --den_.r[k];
    }
    while (den_.one_plus_r[k] > 0) {
      auto q = num_.divide_by_one_plus_r(k + 1);
      if (!q) break;
      num_ = std::move(*q);
      --den_.one_plus_r[k];
    }
  }
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    auto d = lcm(den_, o.den_);
    num_ = num_ * lift(den_, d) + o.num_ * lift(o.den_, d);
    den_ = d;
  }
  cancel();
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) { return *this += -o; }

Coefficient operator-(const Coefficient& a) {
  Coefficient c = a;
  c.num_ *= Rational(-1);
  return c;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  num_ = num_ * o.num_;
  for (int k = 0; k < kMaxSites; ++k) {
    den_.r[k] = static_cast<std::uint8_t>(den_.r[k] + o.den_.r[k]);
    den_.one_plus_r[k] = static_cast<std::uint8_t>(den_.one_plus_r[k] + o.den_.one_plus_r[k]);
  }
  cancel();
  return *this;
}

bool operator==(const Coefficient& a, const Coefficient& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  auto d = lcm(a.den_, b.den_);
  return (a.num_ * lift(a.den_, d) - b.num_ * lift(b.den_, d)).is_zero();
}

Coefficient Coefficient::derivative(BosonVar v) const {
  if (v.kind == BosonKind::r) throw DomainError("derivative: only x_i and y_i are independent variables");
  const int site = v.site;
  const auto rv = r_var(site);
  Coefficient dr = Coefficient::var(v) * inv_r(site);  // dr/dv = v / r

  Coefficient out(num_.explicit_derivative(v), den_);
  if (num_.depends_on(rv)) out += Coefficient(num_.explicit_derivative(rv), den_) * dr;

  const int a = den_.r[site - 1];
  const int b = den_.one_plus_r[site - 1];
  if (a != 0 || b != 0) {
    // d(1/D) = -(1/D) dr (a / r + b / (1 + r))
    Coefficient log_d = Coefficient(a) * inv_r(site) + Coefficient(b) * inv_one_plus_r(site);
    out -= *this * dr * log_d;
  }
  return out;
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw DomainError("inverse: zero coefficient");
  Polynomial rest = num_;
  Denominator factors;
  for (int k = 0; k < kMaxSites; ++k) {
    while (auto q = rest.divide_by_r(k + 1)) {
      rest = std::move(*q);
      ++factors.r[k];
    }
    while (auto q = rest.divide_by_one_plus_r(k + 1)) {
      rest = std::move(*q);
      ++factors.one_plus_r[k];
    }
  }
  if (!rest.is_constant()) throw DomainError("inverse: coefficient " + to_string() + " is not a unit");
  Rational c = rest.constant_term();
  Polynomial num = denominator_polynomial(den_) * Rational(1 / c);
  return Coefficient(std::move(num), factors);
}

std::string Coefficient::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::ostringstream os;
  os << '(' << num_.to_string() << ")/(";
  bool first = true;
  for (int k = 0; k < kMaxSites; ++k) {
    auto emit = [&](const std::string& base, int e) {
      if (e == 0) return;
      if (!first) os << '*';
      first = false;
      os << base;
      if (e > 1) os << '^' << e;
    };
    emit("r" + std::to_string(k + 1), den_.r[k]);
    emit("(1+r" + std::to_string(k + 1) + ")", den_.one_plus_r[k]);
  }
  os << ')';
  return os.str();
}

}  // namespace h22::susy
