#include "h22/superalgebra/supernumber.hpp"

#include <sstream>

#include "h22/errors.hpp"

namespace h22::susy {

std::string FermionMonomial::to_string() const {
  if (bits_ == 0) return "1";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 32; ++k) {
    if (((bits_ >> k) & 1u) == 0) continue;
    if (!first) os << '*';
    first = false;
    os << ((k & 1) ? "eta" : "xi") << (k / 2 + 1);
  }
  return os.str();
}

int product_sign(FermionMonomial a, FermionMonomial b) {
  if ((a.bits() & b.bits()) != 0) return 0;
  // Each generator of b must pass every generator of a that sorts after it.
  int swaps = 0;
  std::uint32_t rest = b.bits();
  while (rest != 0) {
    int j = std::countr_zero(rest);
    rest &= rest - 1;
    std::uint32_t above = j == 31 ? 0u : ~((2u << j) - 1u);
    swaps += std::popcount(a.bits() & above);
  }
  return (swaps & 1) ? -1 : 1;
}

void require_same_sites(const SuperNumber& a, const SuperNumber& b) {
  if (a.sites() != b.sites())
    throw StructuralError("supernumbers over " + std::to_string(a.sites()) + " and " + std::to_string(b.sites()) +
                          " sites cannot be combined");
}

SuperNumber::SuperNumber(int sites) : sites_(sites) {
  if (sites < 1 || sites > kMaxSites)
    throw SizeError("supernumber site count must be in 1.." + std::to_string(kMaxSites));
}

SuperNumber::SuperNumber(int sites, const Coefficient& c) : SuperNumber(sites) { add(FermionMonomial{}, c); }

SuperNumber SuperNumber::term(int sites, FermionMonomial m, const Coefficient& c) {
  SuperNumber s(sites);
  if (m.bits() >> (2 * sites) != 0) throw StructuralError("fermion monomial refers to a site beyond " + std::to_string(sites));
  s.add(m, c);
  return s;
}

SuperNumber SuperNumber::generator(int sites, FermionIndex g) {
  if (g.site < 1 || g.site > sites) throw StructuralError("generator site out of range");
  return term(sites, FermionMonomial::of(g), Coefficient(1));
}

SuperNumber SuperNumber::xi(int sites, int site) { return generator(sites, xi_idx(site)); }
SuperNumber SuperNumber::eta(int sites, int site) { return generator(sites, eta_idx(site)); }

SuperNumber SuperNumber::boson(int sites, BosonVar v) {
  if (v.site < 1 || v.site > sites) throw StructuralError("bosonic variable site out of range");
  return SuperNumber(sites, Coefficient::var(v));
}

void SuperNumber::add(FermionMonomial m, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> SuperNumber::parity() const {
  if (terms_.empty()) return 0;
  int p = terms_.begin()->first.parity();
  for (const auto& [m, c] : terms_)
    if (m.parity() != p) return std::nullopt;
  return p;
}

Coefficient SuperNumber::body() const { return coefficient(FermionMonomial{}); }

Coefficient SuperNumber::coefficient(FermionMonomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient() : it->second;
}

SuperNumber& SuperNumber::operator+=(const SuperNumber& o) {
  require_same_sites(*this, o);
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

SuperNumber& SuperNumber::operator-=(const SuperNumber& o) {
  require_same_sites(*this, o);
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

SuperNumber operator-(const SuperNumber& a) {
  SuperNumber out(a.sites_);
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
  return out;
}

SuperNumber operator*(const SuperNumber& a, const SuperNumber& b) {
  require_same_sites(a, b);
  SuperNumber out(a.sites_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      int s = product_sign(ma, mb);
      if (s == 0) continue;
      Coefficient c = ca * cb;
      if (s < 0) c = -c;
      out.add(FermionMonomial(ma.bits() | mb.bits()), c);
    }
  }
  return out;
}

SuperNumber operator*(const Coefficient& c, const SuperNumber& a) {
  SuperNumber out(a.sites_);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : a.terms_) out.add(m, c * v);
  return out;
}

bool operator==(const SuperNumber& a, const SuperNumber& b) {
  if (a.sites_ != b.sites_) return false;
  return (a - b).is_zero();
}

std::string SuperNumber::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '[' << c.to_string() << ']';
    if (m.bits() != 0) os << '*' << m.to_string();
  }
  return os.str();
}

}  // namespace h22::susy
