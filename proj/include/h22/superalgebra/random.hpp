#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "h22/superalgebra/supernumber.hpp"

namespace h22::susy {

struct RandomSpec {
  int sites = 2;
  int max_boson_degree = 3;   // total degree in x, y (and r when allowed)
  int max_fermion_degree = 4;
  int terms = 4;
  bool allow_r = false;       // also draw r_i, 1/r_i and 1/(1+r_i) factors
  std::optional<int> parity;  // force every monomial to this parity
};

/// Small random element with rational coefficients in [-3, 3] (denominators <= 3).
SuperNumber random_supernumber(std::mt19937_64& rng, const RandomSpec& spec);

Rational random_rational(std::mt19937_64& rng, int max_num = 3, int max_den = 3);

}  // namespace h22::susy
