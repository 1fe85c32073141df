#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace h22::susy {

using Rational = mpq_class;

// The engine is a desk-scale tool: at most four sites.
inline constexpr int kMaxSites = 4;

enum class BosonKind : std::uint8_t { x = 0, y = 1, r = 2 };

/// Bosonic generator x_i, y_i or r_i (sites are 1-based). r_i stands for
/// sqrt(1 + x_i^2 + y_i^2) and is reduced by r_i^2 = 1 + x_i^2 + y_i^2.
struct BosonVar {
  BosonKind kind;
  int site;

  int slot() const { return 3 * (site - 1) + static_cast<int>(kind); }
};

inline BosonVar x_var(int site) { return {BosonKind::x, site}; }
inline BosonVar y_var(int site) { return {BosonKind::y, site}; }
inline BosonVar r_var(int site) { return {BosonKind::r, site}; }

struct Monomial {
  std::array<std::uint8_t, 3 * kMaxSites> exps{};

  std::uint8_t operator[](BosonVar v) const { return exps[v.slot()]; }
  std::uint8_t& operator[](BosonVar v) { return exps[v.slot()]; }
  int degree() const;
  bool is_one() const { return degree() == 0; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
};

/// Polynomial in {x_i, y_i, r_i} with exact rational coefficients, kept
/// reduced so that every r_i appears with exponent at most one.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(int c) : Polynomial(Rational(c)) {}
  static Polynomial var(BosonVar v);
  static Polynomial term(const Rational& c, const Monomial& m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  bool depends_on(BosonVar v) const;
  bool has_r() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Partial derivative treating r_i as an independent symbol.
  Polynomial explicit_derivative(BosonVar v) const;

  /// Splits p = a + b * r_site.
  std::pair<Polynomial, Polynomial> split_r(int site) const;

  /// Exact quotient by r_site (resp. 1 + r_site) in the reduced ring, or
  /// nullopt when the division leaves a remainder.
  std::optional<Polynomial> divide_by_r(int site) const;
  std::optional<Polynomial> divide_by_one_plus_r(int site) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

std::string monomial_to_string(const Monomial& m);

}  // namespace h22::susy
