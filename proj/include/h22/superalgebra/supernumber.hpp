#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "h22/superalgebra/coefficient.hpp"

namespace h22::susy {

enum class Species : std::uint8_t { xi = 0, eta = 1 };

/// Grassmann generator xi_site or eta_site. The frozen total order is
/// xi_1 < eta_1 < xi_2 < eta_2 < ...
struct FermionIndex {
  int site;
  Species species;

  int ordinal() const { return 2 * (site - 1) + static_cast<int>(species); }
};

inline FermionIndex xi_idx(int site) { return {site, Species::xi}; }
inline FermionIndex eta_idx(int site) { return {site, Species::eta}; }

/// Strictly increasing product of generators, stored as a bit set over ordinals.
class FermionMonomial {
 public:
  constexpr FermionMonomial() = default;
  constexpr explicit FermionMonomial(std::uint32_t bits) : bits_(bits) {}
  static FermionMonomial of(FermionIndex g) { return FermionMonomial(1u << g.ordinal()); }

  std::uint32_t bits() const { return bits_; }
  int degree() const { return std::popcount(bits_); }
  int parity() const { return degree() & 1; }
  bool contains(FermionIndex g) const { return (bits_ >> g.ordinal()) & 1u; }

  // Ordered by degree first so printing lists the body before the soul.
  friend bool operator<(FermionMonomial a, FermionMonomial b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a.bits_ < b.bits_;
  }
  friend bool operator==(FermionMonomial, FermionMonomial) = default;

  std::string to_string() const;

 private:
  std::uint32_t bits_ = 0;
};

/// Sign (+1, -1) of sorting the concatenation a·b, or 0 if they share a generator.
int product_sign(FermionMonomial a, FermionMonomial b);

/// Element of the Grassmann algebra over xi_1, eta_1, ..., xi_N, eta_N with
/// coefficients in the bosonic ring. Immutable in spirit: every operation
/// returns a new value; zero coefficients are never stored.
class SuperNumber {
 public:
  using Terms = std::map<FermionMonomial, Coefficient>;

  explicit SuperNumber(int sites);
  SuperNumber(int sites, const Coefficient& c);

  static SuperNumber xi(int sites, int site);
  static SuperNumber eta(int sites, int site);
  static SuperNumber generator(int sites, FermionIndex g);
  static SuperNumber boson(int sites, BosonVar v);
  static SuperNumber term(int sites, FermionMonomial m, const Coefficient& c);

  int sites() const { return sites_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// 0 or 1 when every monomial has the same degree parity; nullopt otherwise.
  /// The zero element is reported as even.
  std::optional<int> parity() const;
  Coefficient body() const;
  Coefficient coefficient(FermionMonomial m) const;

  SuperNumber& operator+=(const SuperNumber& o);
  SuperNumber& operator-=(const SuperNumber& o);
  friend SuperNumber operator+(SuperNumber a, const SuperNumber& b) { return a += b; }
  friend SuperNumber operator-(SuperNumber a, const SuperNumber& b) { return a -= b; }
  friend SuperNumber operator-(const SuperNumber& a);
  friend SuperNumber operator*(const SuperNumber& a, const SuperNumber& b);
  friend SuperNumber operator*(const Coefficient& c, const SuperNumber& a);
  friend SuperNumber operator*(const SuperNumber& a, const Coefficient& c) { return c * a; }
  friend bool operator==(const SuperNumber& a, const SuperNumber& b);

  /// Deterministic canonical text, used for golden files.
  std::string to_string() const;

 private:
  void add(FermionMonomial m, const Coefficient& c);
  int sites_;
  Terms terms_;
};

void require_same_sites(const SuperNumber& a, const SuperNumber& b);

}  // namespace h22::susy
