#include <doctest.h>

#include <random>

#include "h22/errors.hpp"
#include "h22/superalgebra/gaussian.hpp"
#include "h22/superalgebra/operators.hpp"
#include "h22/superalgebra/random.hpp"

using namespace h22::susy;

namespace {

SuperNumber X(int n, int i) { return SuperNumber::boson(n, x_var(i)); }
SuperNumber Y(int n, int i) { return SuperNumber::boson(n, y_var(i)); }
SuperNumber R(int n, int i) { return SuperNumber::boson(n, r_var(i)); }
SuperNumber Xi(int n, int i) { return SuperNumber::xi(n, i); }
SuperNumber Eta(int n, int i) { return SuperNumber::eta(n, i); }
SuperNumber One(int n) { return SuperNumber(n, Coefficient(1)); }
SuperNumber C(int n, const Rational& q) { return SuperNumber(n, Coefficient(q)); }

}  // namespace

TEST_CASE("addition: identity, inverse, bosonic sums") {
  CHECK(Xi(1, 1) + SuperNumber(1) == Xi(1, 1));
  auto pair = Xi(1, 1) * Eta(1, 1);
  auto zero = pair + C(1, -1) * pair;
  CHECK(zero.is_zero());
  CHECK(zero.terms().empty());

  auto s = X(1, 1) + R(1, 1);
  REQUIRE(s.terms().size() == 1);
  CHECK(s.body() == Coefficient::var(x_var(1)) + Coefficient::var(r_var(1)));
}

TEST_CASE("multiplication follows the graded sign rule") {
  CHECK(Xi(1, 1) * Eta(1, 1) == SuperNumber::term(1, FermionMonomial(0b11), Coefficient(1)));
  CHECK(Eta(1, 1) * Xi(1, 1) == -(Xi(1, 1) * Eta(1, 1)));
  CHECK((Xi(1, 1) * Xi(1, 1)).is_zero());
  CHECK(product_sign(FermionMonomial::of(eta_idx(2)), FermionMonomial::of(xi_idx(1)) ) == -1);
}

TEST_CASE("mismatched site counts are a structural error") {
  CHECK_THROWS_AS(Xi(1, 1) + Xi(2, 1), h22::StructuralError);
  CHECK_THROWS_AS(Xi(1, 1) * Xi(2, 2), h22::StructuralError);
  CHECK_THROWS_AS(Xi(1, 2), h22::StructuralError);
}

TEST_CASE("left fermionic derivative") {
  const int n = 2;
  auto f = X(n, 1) + Eta(n, 1) * Xi(n, 2) + Y(n, 2) * Eta(n, 2);
  CHECK(fermion_derive_left(Xi(n, 1) * f, xi_idx(1)) == f);
  CHECK(fermion_derive_left(Eta(1, 1), xi_idx(1)).is_zero());
  CHECK(fermion_derive_left(Xi(1, 1) * Eta(1, 1), eta_idx(1)) == -Xi(1, 1));
}

TEST_CASE("berezin pair extracts the top coefficient with the d_xi d_eta sign") {
  CHECK(berezin_pair(Xi(1, 1) * Eta(1, 1), 1) == C(1, -1));
  Rational w(5, 3);
  CHECK(berezin_pair(One(1) - C(1, w) * Xi(1, 1) * Eta(1, 1), 1) == C(1, w));
  CHECK(berezin_pair(One(1), 1).is_zero());
  // Reversed order flips the sign of a single pair.
  CHECK(berezin_pair(Xi(1, 1) * Eta(1, 1), 1, BerezinOrder::xi_inner) == C(1, 1));
}

TEST_CASE("bosonic derivative and the chain rule through r") {
  CHECK(boson_derive(X(1, 1) * X(1, 1), x_var(1)) == C(1, 2) * X(1, 1));
  CHECK(boson_derive(R(1, 1), x_var(1)) == Coefficient::inv_r(1) * X(1, 1));
  CHECK(boson_derive(X(2, 1) * Xi(2, 1), y_var(2)).is_zero());
  CHECK_THROWS_AS(boson_derive(R(1, 1), r_var(1)), h22::DomainError);
  // d/dx (1/(1+r)) = -x / (r (1+r)^2)
  auto d = boson_derive(SuperNumber(1, Coefficient::inv_one_plus_r(1)), x_var(1));
  auto expect = -(Coefficient::inv_r(1) * Coefficient::inv_one_plus_r(1) * Coefficient::inv_one_plus_r(1)) * X(1, 1);
  CHECK(d == expect);
}

TEST_CASE("Q on the basic variables") {
  CHECK(apply_Q(X(1, 1)) == Xi(1, 1));
  CHECK(apply_Q(Y(1, 1)) == Eta(1, 1));
  CHECK(apply_Q(Xi(1, 1)) == -Y(1, 1));
  CHECK(apply_Q(Eta(1, 1)) == X(1, 1));
  CHECK(apply_Q(build_H(1, 1)).is_zero());
  CHECK(apply_Q(X(1, 1) * Eta(1, 1) - Y(1, 1) * Xi(1, 1)) == build_H(1, 1));
}

TEST_CASE("z is the terminating square root and is Q-closed") {
  auto z = build_z(1, 1);
  CHECK(z * z == One(1) + X(1, 1) * X(1, 1) + Y(1, 1) * Y(1, 1) + C(1, 2) * Xi(1, 1) * Eta(1, 1));
  CHECK(apply_Q(z).is_zero());
  // body r (= 1 at x = y = 0), soul xi eta / r (= xi eta there)
  CHECK(z.body() == Coefficient::var(r_var(1)));
  CHECK(z.coefficient(FermionMonomial(0b11)) == Coefficient::inv_r(1));
}

TEST_CASE("invert_even") {
  auto z = build_z(1, 1);
  auto one_plus_z = One(1) + z;
  CHECK(invert_even(one_plus_z) * one_plus_z == One(1));
  Rational w(7, 2);
  auto pair = Xi(1, 1) * Eta(1, 1);
  CHECK(invert_even(One(1) - C(1, w) * pair) == One(1) + C(1, w) * pair);
  CHECK_THROWS_AS(invert_even(pair), h22::DomainError);
  CHECK_THROWS_AS(invert_even(One(1) + Xi(1, 1)), h22::DomainError);
  CHECK_THROWS_AS(invert_even(One(1) + X(1, 1) * X(1, 1)), h22::DomainError);
  // r^2 = 1 + x^2 + y^2 is a unit: its inverse is 1/r^2.
  auto s = One(1) + X(1, 1) * X(1, 1) + Y(1, 1) * Y(1, 1);
  CHECK(invert_even(s) * s == One(1));
}

TEST_CASE("coefficients cancel to a unique reduced fraction") {
  Coefficient r = Coefficient::var(r_var(1));
  Coefficient c = (r + Coefficient(1)) * Coefficient::inv_one_plus_r(1);
  CHECK(c.denominator().is_one());
  CHECK(c == Coefficient(1));
  Coefficient s = Coefficient(1) + Coefficient::var(x_var(1)) * Coefficient::var(x_var(1)) +
                  Coefficient::var(y_var(1)) * Coefficient::var(y_var(1));
  CHECK((s * Coefficient::inv_r(1)).to_string() == "r1");
  // 1/(1+r) = (r - 1)/(x^2 + y^2): cross-multiplied equality.
  Coefficient lhs = Coefficient::inv_one_plus_r(1) * (s - Coefficient(1));
  CHECK(lhs == r - Coefficient(1));
}

TEST_CASE("flat Gaussian integration") {
  Rational w(3, 2);
  std::vector<Rational> ws{w};
  auto pair = Xi(1, 1) * Eta(1, 1);
  auto ef = One(1) - C(1, w) * pair;
  CHECK(gaussian_flat_integrate(ef, ws) == 1);
  CHECK(gaussian_flat_integrate(X(1, 1) * X(1, 1) * ef, ws) == 1 / w);
  CHECK(gaussian_flat_integrate(Xi(1, 1), ws) == 0);
  CHECK_THROWS_AS(gaussian_flat_integrate(R(1, 1) * ef, ws), h22::PreconditionError);
  CHECK(gaussian_moment(4, w) == 3 / (w * w));
  CHECK(gaussian_moment(3, w) == 0);
}

TEST_CASE("canonical serialization is stable") {
  CHECK(build_z(1, 1).to_string() == "[r1] + [(1)/(r1)]*xi1*eta1");
  CHECK(build_H(2, 2).to_string() == "[x2^2 + y2^2] + [2]*xi2*eta2");
  CHECK((Eta(2, 2) * Xi(2, 1)).to_string() == "[-1]*xi1*eta2");
}

// ---- property-style checks over random samples ------------------------------

TEST_CASE("anticommutation and nilpotency of all generators") {
  for (int n = 1; n <= 3; ++n) {
    for (int a = 0; a < 2 * n; ++a) {
      FermionIndex g{a / 2 + 1, static_cast<Species>(a % 2)};
      auto G = SuperNumber::generator(n, g);
      CHECK((G * G).is_zero());
      for (int b = 0; b < 2 * n; ++b) {
        if (a == b) continue;
        auto H = SuperNumber::generator(n, FermionIndex{b / 2 + 1, static_cast<Species>(b % 2)});
        CHECK(G * H == -(H * G));
      }
    }
  }
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    RandomSpec spec{.sites = 1 + trial % 3, .max_boson_degree = 2, .max_fermion_degree = 6, .terms = 3,
                    .allow_r = trial % 2 == 0, .parity = {}};
    auto a = random_supernumber(rng, spec);
    auto b = random_supernumber(rng, spec);
    auto c = random_supernumber(rng, spec);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
  }
}

TEST_CASE("super-Leibniz rule for Q") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    int parity = trial % 2;
    RandomSpec fs{.sites = 1 + trial % 2, .max_boson_degree = 3, .max_fermion_degree = 3, .terms = 3,
                  .allow_r = trial % 3 == 0, .parity = parity};
    RandomSpec gs = fs;
    gs.parity.reset();
    auto f = random_supernumber(rng, fs);
    auto g = random_supernumber(rng, gs);
    auto lhs = apply_Q(f * g);
    auto rhs = apply_Q(f) * g + (parity ? -(f * apply_Q(g)) : f * apply_Q(g));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Q squared is the rotation generator") {
  std::mt19937_64 rng(37);
  std::vector<SuperNumber> bank{build_z(2, 1), build_H(2, 2), build_lambda(2, 1), inner_product(2, 1, 2),
                                invert_even(SuperNumber(2, Coefficient(1)) + build_z(2, 2))};
  for (int trial = 0; trial < 30; ++trial)
    bank.push_back(random_supernumber(rng, {.sites = 2, .max_boson_degree = 3, .terms = 3, .allow_r = trial % 2 == 1, .parity = {}}));
  for (const auto& a : bank) CHECK(apply_Q(apply_Q(a)) == rotation_generator(a));
}

TEST_CASE("Q annihilates H_i, z_i and every inner product") {
  for (int n = 1; n <= 3; ++n) {
    for (int i = 1; i <= n; ++i) {
      CHECK(apply_Q(build_H(n, i)).is_zero());
      CHECK(apply_Q(build_z(n, i)).is_zero());
      CHECK(apply_Q(build_lambda(n, i)) == build_H(n, i));
      CHECK(inner_product(n, i, i) == SuperNumber(n, Coefficient(-1)));
      for (int j = 1; j <= n; ++j) CHECK(apply_Q(inner_product(n, i, j)).is_zero());
    }
  }
}

TEST_CASE("fermionic Gaussian integral reproduces det(Sigma)") {
  std::mt19937_64 rng(41);
  auto det = [](const std::vector<std::vector<Rational>>& m) {
    // cofactor expansion oracle
    const auto n = m.size();
    if (n == 1) return Rational(m[0][0]);
    if (n == 2) return Rational(m[0][0] * m[1][1] - m[0][1] * m[1][0]);
    return Rational(m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                    m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]));
  };
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + trial % 3;
    std::vector<std::vector<Rational>> sigma(n, std::vector<Rational>(n));
    for (auto& row : sigma)
      for (auto& v : row) v = random_rational(rng, 5, 4);
    CHECK(fermionic_gaussian_integral(sigma) == det(sigma));
  }
  // The reversed pair order produces (-1)^N det: visible at N = 1.
  std::vector<std::vector<Rational>> one{{Rational(2)}};
  CHECK(fermionic_gaussian_integral(one, BerezinOrder::xi_inner) == -2);
}
