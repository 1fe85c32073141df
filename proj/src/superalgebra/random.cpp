#include "h22/superalgebra/random.hpp"

namespace h22::susy {

Rational random_rational(std::mt19937_64& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

SuperNumber random_supernumber(std::mt19937_64& rng, const RandomSpec& spec) {
  const int n = spec.sites;
  SuperNumber out(n);
  std::uniform_int_distribution<int> site_d(1, n);
  std::uniform_int_distribution<int> deg_d(0, spec.max_boson_degree);
  std::uniform_int_distribution<int> kind_d(0, spec.allow_r ? 2 : 1);
  std::uniform_int_distribution<std::uint32_t> bits_d(0, (1u << (2 * n)) - 1u);
  std::uniform_int_distribution<int> denom_d(0, 3);

  for (int t = 0; t < spec.terms; ++t) {
    FermionMonomial m;
    do {
      m = FermionMonomial(bits_d(rng));
    } while (m.degree() > spec.max_fermion_degree || (spec.parity && m.parity() != *spec.parity));

    Monomial bm;
    int deg = deg_d(rng);
    for (int k = 0; k < deg; ++k) {
      BosonVar v{static_cast<BosonKind>(kind_d(rng)), site_d(rng)};
      bm[v] = static_cast<std::uint8_t>(bm[v] + 1);
    }
    Coefficient c(Polynomial::term(random_rational(rng), bm));
    if (spec.allow_r) {
      int which = denom_d(rng);
      if (which == 1) c *= Coefficient::inv_r(site_d(rng));
      if (which == 2) c *= Coefficient::inv_one_plus_r(site_d(rng));
    }
    out += SuperNumber::term(n, m, c);
  }
  return out;
}

}  // namespace h22::susy
