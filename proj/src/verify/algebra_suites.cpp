#include <random>
#include <sstream>
#include <string>

#include "h22/errors.hpp"
#include "h22/superalgebra/gaussian.hpp"
#include "h22/superalgebra/operators.hpp"
#include "h22/superalgebra/random.hpp"
#include "h22/verify/algebra_suites.hpp"

namespace h22::verify {

using namespace h22::susy;

namespace {

SuperNumber X(int n, int i) { return SuperNumber::boson(n, x_var(i)); }
SuperNumber Y(int n, int i) { return SuperNumber::boson(n, y_var(i)); }
SuperNumber Xi(int n, int i) { return SuperNumber::xi(n, i); }
SuperNumber Eta(int n, int i) { return SuperNumber::eta(n, i); }
SuperNumber One(int n) { return SuperNumber(n, Coefficient(1)); }
SuperNumber C(int n, const Rational& q) { return SuperNumber(n, Coefficient(q)); }

Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::vector<Rational> uniform_w(int n, const Rational& w) { return std::vector<Rational>(n, w); }

SuperNumber e_f(int n, std::span<const Rational> w) { return fermionic_gaussian_factor(n, w); }

// int a A for the flat Q-invariant weight A = E_f e^{-sum w (x^2 + y^2) / 2}.
Rational flat(const SuperNumber& a, std::span<const Rational> w) {
  return gaussian_flat_integrate(a * e_f(a.sites(), w), w);
}

std::mt19937_64 suite_rng(const SuiteOptions& opt, std::string_view suite) {
  return std::mt19937_64(opt.seed ^ fnv1a(suite));
}

std::string fermion_name(FermionIndex g) {
  return (g.species == Species::xi ? "xi" : "eta") + std::to_string(g.site);
}

std::string poly_in_x(const std::vector<Rational>& c) {
  Polynomial p;
  Polynomial xp(1);
  for (const auto& ck : c) {
    p += xp * ck;
    xp = xp * Polynomial::var(x_var(1));
  }
  return p.to_string();
}

std::string w_text(std::span<const Rational> w) {
  std::string s = "w=(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + w[i].get_str();
  return s + ")";
}

}  // namespace

IdentityCheck verify_localization(const SuperNumber& p, const Rational& w) {
  for (const auto& [m, c] : p.terms())
    if (!c.is_plain_polynomial()) throw PreconditionError("verify_localization: P must have polynomial coefficients");
  const int n = p.sites();
  const auto ws = uniform_w(n, w);
  const auto pe = p * e_f(n, ws);
  SuperNumber sigma(n);
  for (int i = 1; i <= n; ++i) sigma += X(n, i) * Xi(n, i) + Y(n, i) * Eta(n, i);
  const auto integrand = apply_Q(pe) - C(n, w) * sigma * pe;
  const Rational got = gaussian_flat_integrate(integrand, ws);
  return exact_equal("localization", "localization", "P=" + p.to_string() + " w=" + w.get_str(), Rational(0), got);
}

IdentityCheck verify_ibp(const SuperNumber& f, const SuperNumber& g, const Rational& w) {
  const auto parity = f.parity();
  if (!parity) throw DomainError("verify_ibp: f must have homogeneous parity");
  const auto ws = uniform_w(f.sites(), w);
  const Rational lhs = flat(apply_Q(f) * g, ws);
  const Rational rhs = (*parity ? 1 : -1) * flat(f * apply_Q(g), ws);
  return exact_equal("ibp", *parity ? "ibp-odd" : "ibp-even",
                     "f=" + f.to_string() + " g=" + g.to_string() + " w=" + w.get_str(), rhs, lhs);
}

std::vector<IdentityCheck> verify_slepian_chain(const std::vector<Rational>& c, const Rational& w) {
  const std::vector<Rational> ws{w};
  auto poly = [&](int order) {
    SuperNumber s(1);
    for (std::size_t k = order; k < c.size(); ++k) {
      Rational fall(1);
      for (int j = 0; j < order; ++j) fall *= static_cast<long>(k - j);
      SuperNumber xp = One(1);
      for (std::size_t j = order; j < k; ++j) xp = xp * X(1, 1);
      s += C(1, c[k] * fall) * xp;
    }
    return s;
  };
  const auto f = poly(0), f1 = poly(1), f2 = poly(2);

  // Closed forms from the Gaussian moments E[N^k] = (k-1)!! w^{-k/2}.
  Rational mean_f, d_mean_f, mean_f2;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const Rational mk = gaussian_moment(static_cast<int>(k), w);
    mean_f += c[k] * mk;
    d_mean_f += c[k] * frac(-static_cast<long>(k), 2) * mk / w;
    if (k >= 2) mean_f2 += c[k] * static_cast<long>(k * (k - 1)) * gaussian_moment(static_cast<int>(k) - 2, w);
  }

  const auto H = build_H(1, 1);
  const auto lambda = build_lambda(1, 1);
  const auto nu = -(X(1, 1) * Y(1, 1) * Xi(1, 1)) - Y(1, 1) * Y(1, 1) * Eta(1, 1);
  const auto y2 = Y(1, 1) * Y(1, 1);

  const Rational half(1, 2);
  const Rational i_susy = flat(f, ws);
  const Rational s1 = -half * flat(f * H, ws);
  const Rational s2 = half * flat(apply_Q(f) * lambda, ws);
  const Rational s3 = half * flat(f1 * apply_Q(nu), ws);
  const Rational s4 = -half * flat(f2 * Xi(1, 1) * nu, ws);
  const Rational s5 = half * flat(f2 * y2 * Xi(1, 1) * Eta(1, 1), ws);
  const auto f2y2 = (f2 * y2).body().numerator();
  const Rational s6 = -half * bosonic_gaussian_integrate(f2y2, ws);
  const Rational s7 = -mean_f2 / (2 * w * w);

  const std::string in = "f=" + poly_in_x(c) + " w=" + w.get_str();
  const std::string suite = "slepian";
  std::vector<IdentityCheck> out;
  out.push_back(exact_equal(suite, "susy-representation", in, mean_f, i_susy));
  out.push_back(exact_equal(suite, "dI/dw=-1/2<fH>", in, d_mean_f, s1));
  out.push_back(exact_equal(suite, "Q(lambda)=H hop", in, s1, s2));
  out.push_back(exact_equal(suite, "Q(f)=f'xi, xi lambda=Q(nu)", in, s2, s3));
  out.push_back(exact_equal(suite, "second hop", in, s3, s4));
  out.push_back(exact_equal(suite, "xi nu=-y^2 xi eta", in, s4, s5));
  out.push_back(exact_equal(suite, "fermion pair to -1", in, s5, s6));
  out.push_back(exact_equal(suite, "closed form -E[f'']/(2w^2)", in, s6, s7));
  out.push_back(exact_equal(suite, "dI/dw=-E[f'']/(2w^2)", in, s7, d_mean_f));
  return out;
}

std::vector<IdentityCheck> verify_onepoint_ladder() {
  const std::string suite = "onepoint";
  const int n = 1;
  const auto z = build_z(n, 1);
  const auto lambda = build_lambda(n, 1);
  const auto inv = invert_even(One(n) + z);
  const auto lambda_t = lambda * inv;
  const auto nu = -(X(n, 1) * Y(n, 1) * Xi(n, 1)) - Y(n, 1) * Y(n, 1) * Eta(n, 1);
  const auto nu_t = nu * inv;
  const auto pair = Xi(n, 1) * Eta(n, 1);

  std::vector<IdentityCheck> out;
  out.push_back(exact_zero(suite, "Q(z)=0", "z=" + z.to_string(), apply_Q(z)));
  out.push_back(exact_zero(suite, "Q(lambda)=H", "lambda=" + lambda.to_string(), apply_Q(lambda) - build_H(n, 1)));
  out.push_back(exact_zero(suite, "(1+z)^{-1}(1+z)=1", "", inv * (One(n) + z) - One(n)));
  out.push_back(exact_zero(suite, "Q(1/(1+z))=0", "", apply_Q(inv)));
  out.push_back(exact_zero(suite, "Q(lambda~)=z-1", "lambda~=" + lambda_t.to_string(),
                           apply_Q(lambda_t) - (z - One(n))));
  out.push_back(exact_zero(suite, "xi lambda=x xi eta", "", Xi(n, 1) * lambda - X(n, 1) * pair));
  out.push_back(exact_zero(suite, "xi lambda=Q(nu)", "nu=" + nu.to_string(), Xi(n, 1) * lambda - apply_Q(nu)));
  out.push_back(exact_zero(suite, "xi lambda~=Q(nu~)", "nu~=" + nu_t.to_string(),
                           Xi(n, 1) * lambda_t - apply_Q(nu_t)));
  out.push_back(exact_zero(suite, "xi nu~=-y^2 xi eta/(1+z)", "",
                           Xi(n, 1) * nu_t + Y(n, 1) * Y(n, 1) * pair * inv));
  return out;
}

std::vector<IdentityCheck> verify_switching_flat(const Polynomial& f, int sites, int k, int i, int j,
                                                 std::span<const Rational> w) {
  const int n = sites;
  const SuperNumber F(n, Coefficient(f));
  const Rational lhs = flat(F * X(n, k) * Xi(n, i) * Eta(n, j), w);
  const Rational mid = -flat(F * X(n, k) * Y(n, i) * Y(n, j), w);
  Rational rhs;
  for (int l = 1; l <= n; ++l) {
    const SuperNumber dF(n, Coefficient(f.explicit_derivative(x_var(l))));
    rhs += flat(dF * Xi(n, l) * Eta(n, k) * Y(n, i) * Y(n, j), w);
  }
  const std::string in = "F=" + f.to_string() + " N=" + std::to_string(n) + " (k,i,j)=(" + std::to_string(k) + "," +
                         std::to_string(i) + "," + std::to_string(j) + ") " + w_text(w);
  return {exact_equal("switching", "fermion pair to y_i y_j", in, mid, lhs),
          exact_equal("switching", "Q-integration by parts", in, mid, rhs)};
}

Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational det;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][col] * cofactor_det(minor);
    det += col % 2 ? Rational(-term) : term;
  }
  return det;
}

// ---- batteries ---------------------------------------------------------------

std::vector<IdentityCheck> algebra_suite(const SuiteOptions& opt) {
  const std::string suite = "algebra";
  std::vector<IdentityCheck> out;
  for (int n = 1; n <= 3; ++n) {
    const std::string tag = "N=" + std::to_string(n);
    for (int a = 0; a < 2 * n; ++a) {
      const FermionIndex ga{a / 2 + 1, static_cast<Species>(a % 2)};
      const auto G = SuperNumber::generator(n, ga);
      out.push_back(exact_zero(suite, "nilpotent " + fermion_name(ga), tag, G * G));
      for (int b = a + 1; b < 2 * n; ++b) {
        const FermionIndex gb{b / 2 + 1, static_cast<Species>(b % 2)};
        const auto Hb = SuperNumber::generator(n, gb);
        out.push_back(
            exact_zero(suite, "anticommute " + fermion_name(ga) + "," + fermion_name(gb), tag, G * Hb + Hb * G));
      }
    }
    for (int i = 1; i <= n; ++i) {
      const std::string site = tag + " i=" + std::to_string(i);
      out.push_back(exact_zero(suite, "Q(H)=0", site, apply_Q(build_H(n, i))));
      out.push_back(exact_zero(suite, "H=Q(lambda)", site, apply_Q(build_lambda(n, i)) - build_H(n, i)));
      out.push_back(exact_zero(suite, "Q(z)=0", site, apply_Q(build_z(n, i))));
      for (int j = 1; j <= n; ++j)
        out.push_back(exact_zero(suite, "Q(v_i.v_j)=0", site + " j=" + std::to_string(j),
                                 apply_Q(inner_product(n, i, j))));
    }
  }
  auto rng = suite_rng(opt, suite);
  for (int trial = 0; trial < 40; ++trial) {
    const int parity = trial % 2;
    RandomSpec fs{.sites = 1 + trial % 3, .max_boson_degree = 3, .max_fermion_degree = 3, .terms = 3,
                  .allow_r = trial % 3 == 0, .parity = parity};
    RandomSpec gs = fs;
    gs.parity.reset();
    const auto f = random_supernumber(rng, fs);
    const auto g = random_supernumber(rng, gs);
    const auto lhs = apply_Q(f * g);
    const auto rhs = apply_Q(f) * g + (parity ? -(f * apply_Q(g)) : f * apply_Q(g));
    out.push_back(exact_zero(suite, "super-Leibniz", "f=" + f.to_string() + " g=" + g.to_string(), lhs - rhs));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_supernumber(rng, {.sites = 2, .max_boson_degree = 3, .terms = 3, .allow_r = trial % 2 == 1, .parity = {}});
    out.push_back(exact_zero(suite, "Q^2=rotation", "a=" + a.to_string(), apply_Q(apply_Q(a)) - rotation_generator(a)));
  }
  return out;
}

std::vector<IdentityCheck> onepoint_suite(const SuiteOptions&) { return verify_onepoint_ladder(); }

std::vector<IdentityCheck> fermionic_gaussian_suite(const SuiteOptions& opt) {
  const std::string suite = "fermionic_gaussian";
  const auto order = opt.tamper_sign ? BerezinOrder::xi_inner : BerezinOrder::eta_inner;
  auto rng = suite_rng(opt, suite);
  std::vector<IdentityCheck> out;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 3;
    std::vector<std::vector<Rational>> sigma(n, std::vector<Rational>(n));
    std::ostringstream in;
    in << "Sigma=[";
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        sigma[r][c] = random_rational(rng, 5, 4);
        in << (c ? "," : r ? ";" : "") << sigma[r][c].get_str();
      }
    }
    in << "]";
    out.push_back(exact_equal(suite, "det(Sigma) N=" + std::to_string(n), in.str(), cofactor_det(sigma),
                              fermionic_gaussian_integral(sigma, order)));
  }
  return out;
}

std::vector<IdentityCheck> localization_suite(const SuiteOptions& opt) {
  std::vector<IdentityCheck> out;
  out.push_back(verify_localization(build_lambda(1, 1), 1));
  out.push_back(verify_localization(X(1, 1) * Xi(1, 1), 2));
  auto rng = suite_rng(opt, "localization");
  const Rational ws[] = {Rational(1, 2), Rational(1), Rational(3)};
  for (int trial = 0; trial < 20; ++trial) {
    RandomSpec spec{.sites = 1 + trial % 2, .max_boson_degree = 4, .max_fermion_degree = 4, .terms = 4, .allow_r = false, .parity = {}};
    const auto p = random_supernumber(rng, spec);
    for (const auto& w : ws) out.push_back(verify_localization(p, w));
  }
  return out;
}

std::vector<IdentityCheck> ibp_suite(const SuiteOptions& opt) {
  std::vector<IdentityCheck> out;
  out.push_back(verify_ibp(Xi(1, 1), X(1, 1), 1));
  out.push_back(verify_ibp(X(1, 1), X(1, 1) * Eta(1, 1) + Y(1, 1) * Y(1, 1) * Xi(1, 1), Rational(3, 2)));
  out.push_back(verify_ibp(C(2, 5), X(2, 2) * Xi(2, 1), 2));
  auto rng = suite_rng(opt, "ibp");
  for (int trial = 0; trial < 40; ++trial) {
    RandomSpec fs{.sites = 1 + trial % 2, .max_boson_degree = 3, .max_fermion_degree = 3, .terms = 3,
                  .parity = trial % 2};
    RandomSpec gs = fs;
    gs.parity.reset();
    const auto f = random_supernumber(rng, fs);
    const auto g = random_supernumber(rng, gs);
    out.push_back(verify_ibp(f, g, frac(1 + trial % 3, 1 + trial % 2)));
  }
  return out;
}

std::vector<IdentityCheck> slepian_suite(const SuiteOptions& opt) {
  std::vector<std::vector<Rational>> bank{
      {Rational(3)},                     // constant
      {0, 0, 1},                         // x^2
      {0, 0, 0, 0, 1},                   // x^4
      {0, 0, 0, 0, 0, 0, 1},             // x^6
      {1, -2, Rational(1, 2), 0, 1},     // mixed
  };
  auto rng = suite_rng(opt, "slepian");
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Rational> c(7);
    for (auto& ck : c) ck = random_rational(rng);
    bank.push_back(c);
  }
  std::vector<IdentityCheck> out;
  for (const auto& c : bank)
    for (const Rational& w : {Rational(1, 2), Rational(1), Rational(2)})
      for (auto& check : verify_slepian_chain(c, w)) out.push_back(std::move(check));
  return out;
}

std::vector<IdentityCheck> switching_suite(const SuiteOptions& opt) {
  auto rng = suite_rng(opt, "switching");
  std::vector<IdentityCheck> out;
  auto add = [&](std::vector<IdentityCheck> v) {
    for (auto& c : v) out.push_back(std::move(c));
  };
  const Polynomial one(1);
  const Polynomial x1 = Polynomial::var(x_var(1));
  const std::vector<Rational> w2{1, 1};
  add(verify_switching_flat(one, 2, 1, 2, 2, w2));
  add(verify_switching_flat(x1, 2, 2, 1, 2, w2));
  add(verify_switching_flat(x1, 2, 1, 1, 1, w2));

  // Random F of degree <= 4 in x, every index triple, N <= 3.
  for (int n = 1; n <= 3; ++n) {
    std::vector<Rational> w(n);
    for (auto& wi : w) wi = frac(1 + static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 2));
    for (int draw = 0; draw < 2; ++draw) {
      Polynomial f;
      for (int t = 0; t < 4; ++t) {
        Monomial m;
        int budget = static_cast<int>(rng() % 5);
        for (int s = 1; s <= n && budget > 0; ++s) {
          const int e = s == n ? budget : static_cast<int>(rng() % (budget + 1));
          m[x_var(s)] = static_cast<std::uint8_t>(e);
          budget -= e;
        }
        f += Polynomial::term(random_rational(rng), m);
      }
      for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) add(verify_switching_flat(f, n, k, i, j, w));
    }
  }

  // Unequal numbers of xi and eta: the integral vanishes.
  const SuperNumber F(2, Coefficient(x1 * x1 + 1));
  out.push_back(exact_equal("switching", "unmatched xi", "F x_1 xi_2", Rational(0),
                            flat(F * X(2, 1) * Xi(2, 2), w2)));
  out.push_back(exact_equal("switching", "unmatched xi xi", "F xi_1 xi_2", Rational(0),
                            flat(F * Xi(2, 1) * Xi(2, 2), w2)));
  return out;
}

}  // namespace h22::verify
