#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "h22/superalgebra/polynomial.hpp"

namespace h22::susy {

/// Exponents of the allowed denominator prod_i r_i^{a_i} (1 + r_i)^{b_i}.
struct Denominator {
  std::array<std::uint8_t, kMaxSites> r{};
  std::array<std::uint8_t, kMaxSites> one_plus_r{};

  bool is_one() const;
  friend bool operator==(const Denominator&, const Denominator&) = default;
};

/// Element of the bosonic coefficient ring: a reduced polynomial in
/// {x_i, y_i, r_i} over a monomial in r_i and (1 + r_i). Common factors are
/// cancelled on construction. The ring is an integral domain, so equality is
/// decided by cross-multiplication.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(const Polynomial& num);  // NOLINT
  Coefficient(const Rational& c) : Coefficient(Polynomial(c)) {}  // NOLINT
  Coefficient(int c) : Coefficient(Polynomial(c)) {}  // NOLINT
  Coefficient(Polynomial num, const Denominator& den);

  static Coefficient var(BosonVar v) { return Coefficient(Polynomial::var(v)); }
  /// 1 / r_site and 1 / (1 + r_site).
  static Coefficient inv_r(int site);
  static Coefficient inv_one_plus_r(int site);

  const Polynomial& numerator() const { return num_; }
  const Denominator& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// Polynomial in x, y only: no r and no denominator.
  bool is_plain_polynomial() const { return den_.is_one() && !num_.has_r(); }

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator-(const Coefficient& a);
  friend bool operator==(const Coefficient& a, const Coefficient& b);

  /// d/dx_i or d/dy_i with the chain rule dr_i/dx_i = x_i / r_i.
  Coefficient derivative(BosonVar v) const;

  /// Multiplicative inverse; throws DomainError unless this is a unit, i.e.
  /// a nonzero rational times a product of r_i and (1 + r_i) factors.
  Coefficient inverse() const;

  std::string to_string() const;

 private:
  void cancel();
  Polynomial num_;
  Denominator den_;
};

/// Expanded polynomial prod_i r_i^{a_i} (1 + r_i)^{b_i}.
Polynomial denominator_polynomial(const Denominator& d);

}  // namespace h22::susy
