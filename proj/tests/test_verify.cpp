#include <doctest.h>

#include <algorithm>

#include "h22/errors.hpp"
#include "h22/superalgebra/operators.hpp"
#include "h22/verify/algebra_suites.hpp"
#include "h22/verify/numeric_suites.hpp"
#include "h22/verify/run_all.hpp"

using namespace h22;
using namespace h22::verify;
using susy::Rational;
using susy::SuperNumber;

namespace {

SuperNumber X(int n, int i) { return SuperNumber::boson(n, susy::x_var(i)); }
SuperNumber Y(int n, int i) { return SuperNumber::boson(n, susy::y_var(i)); }
SuperNumber Xi(int n, int i) { return SuperNumber::xi(n, i); }
SuperNumber Eta(int n, int i) { return SuperNumber::eta(n, i); }

const IdentityCheck& named(const std::vector<IdentityCheck>& v, const std::string& name) {
  auto it = std::find_if(v.begin(), v.end(), [&](const auto& c) { return c.name == name; });
  REQUIRE(it != v.end());
  return *it;
}

bool all_pass(const std::vector<IdentityCheck>& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& c) { return c.pass; });
}

}  // namespace

TEST_CASE("check records") {
  CHECK(hex_digest("") == "cbf29ce484222325");
  CHECK(hex_digest("a") == "af63dc4c8601ec8c");
  CHECK(format_double(0.1) == "0.10000000000000001");
  const auto c = numeric_close("s", "n", "", 1.0, 1.0 + 1e-7, 1e-6);
  CHECK(c.pass);
  CHECK_FALSE(c.exact);
  CHECK_FALSE(numeric_at_most("s", "n", "", 1e-12, 2e-12).pass);
  CHECK(exact_zero("s", "n", "", SuperNumber(1)).pass);
  CHECK_FALSE(exact_zero("s", "n", "", Xi(1, 1)).pass);
}

TEST_CASE("localization") {
  CHECK(verify_localization(susy::build_lambda(1, 1), 1).pass);
  CHECK(verify_localization(X(1, 1) * Xi(1, 1), 2).pass);
  CHECK(verify_localization(X(2, 1) * X(2, 1) * Y(2, 2) * Eta(2, 1) * Xi(2, 2) + Y(2, 1) * Eta(2, 2), 3).pass);
  CHECK_THROWS_AS(verify_localization(susy::build_z(1, 1), 1), PreconditionError);
}

TEST_CASE("Q-integration by parts") {
  const auto odd = verify_ibp(Xi(1, 1), X(1, 1), 1);
  CHECK(odd.pass);
  CHECK(odd.name == "ibp-odd");
  const auto even = verify_ibp(X(1, 1) * X(1, 1), X(1, 1) * Eta(1, 1) + Y(1, 1) * Y(1, 1) * Xi(1, 1), 2);
  CHECK(even.pass);
  CHECK(even.name == "ibp-even");
  CHECK(even.got != "0");  // a nontrivial equality
  const auto constant = verify_ibp(SuperNumber(1, susy::Coefficient(4)), X(1, 1) * Xi(1, 1), 1);
  CHECK(constant.pass);
  CHECK(constant.got == "0");
  CHECK_THROWS_AS(verify_ibp(X(1, 1) + Xi(1, 1), X(1, 1), 1), DomainError);
}

TEST_CASE("Gaussian convex inequality chain") {
  SUBCASE("f = x^2, w = 1: dI/dw = -1") {
    const auto v = verify_slepian_chain({0, 0, 1}, 1);
    CHECK(all_pass(v));
    CHECK(named(v, "dI/dw=-1/2<fH>").got == "-1");
  }
  SUBCASE("f = x^4, w = 1: dI/dw = -6") {
    const auto v = verify_slepian_chain({0, 0, 0, 0, 1}, 1);
    CHECK(all_pass(v));
    CHECK(named(v, "dI/dw=-E[f'']/(2w^2)").got == "-6");
  }
  SUBCASE("f = x^4, w = 2: -6 / w^3") {
    CHECK(named(verify_slepian_chain({0, 0, 0, 0, 1}, 2), "dI/dw=-1/2<fH>").got == "-3/4");
  }
  SUBCASE("constant f vanishes at every step") {
    const auto v = verify_slepian_chain({Rational(7)}, Rational(1, 2));
    CHECK(all_pass(v));
    for (const auto& c : v)
      if (c.name != "susy-representation") CHECK(c.got == "0");
  }
  CHECK(verify_slepian_chain({1, 2, 3, 4, 5, 6, 7}, 2).size() == 9);
}

TEST_CASE("one-point ladder") {
  const auto v = verify_onepoint_ladder();
  CHECK(all_pass(v));
  for (const char* name : {"Q(z)=0", "Q(lambda~)=z-1", "xi lambda=Q(nu)", "xi lambda~=Q(nu~)", "Q(1/(1+z))=0",
                           "xi nu~=-y^2 xi eta/(1+z)"})
    CHECK_MESSAGE(named(v, name).got == "0", name);
}

TEST_CASE("switching lemma in the flat setting") {
  const std::vector<Rational> w2{1, 1};
  const susy::Polynomial one(1);
  const auto x1 = susy::Polynomial::var(susy::x_var(1));
  CHECK(all_pass(verify_switching_flat(one, 2, 1, 2, 2, w2)));
  const auto mixed = verify_switching_flat(x1, 2, 1, 2, 2, std::vector<Rational>{2, 3});
  CHECK(all_pass(mixed));
  // int x1^2 xi2 eta2 A = E[x1^2] * (-1 / w2) = -1/6.
  CHECK(mixed[0].got == "-1/6");
  CHECK(all_pass(verify_switching_flat(x1 * x1 * x1, 3, 2, 1, 3, std::vector<Rational>{1, 2, Rational(1, 2)})));
}

TEST_CASE("cofactor determinant oracle") {
  CHECK(cofactor_det({}) == 1);
  CHECK(cofactor_det({{Rational(3)}}) == 3);
  CHECK(cofactor_det({{1, 2}, {3, 4}}) == -2);
  CHECK(cofactor_det({{2, 0, 1}, {1, 3, 2}, {1, 1, 1}}) == 0);
  CHECK(cofactor_det({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}) == 1);
}

TEST_CASE("exact batteries pass and the sign fixture is caught") {
  SuiteOptions opt;
  for (const auto& name : suite_names())
    if (is_exact_suite(name)) {
      const auto r = run_suite(name, opt);
      CHECK_MESSAGE(r.pass(), name);
      for (const auto& c : r.checks) CHECK(c.exact);
    }
  CHECK(localization_suite(opt).size() >= 50);
  CHECK(fermionic_gaussian_suite(opt).size() == 100);

  opt.tamper_sign = true;
  const auto tampered = run_suite("fermionic_gaussian", opt);
  CHECK_FALSE(tampered.pass());
  CHECK(tampered.failures() > 0);
  CHECK(run_suite("onepoint", opt).pass());  // the fixture only touches the fermionic Gaussian suite
}

TEST_CASE("run_all_suites selection and report") {
  VerifyConfig cfg;
  cfg.suites = std::vector<std::string>{};
  const auto empty = run_all_suites(cfg);
  CHECK(empty.suites.empty());
  CHECK(empty.pass());

  cfg.suites = std::vector<std::string>{"slepian", "onepoint", "onepoint"};
  const auto r = run_all_suites(cfg);
  REQUIRE(r.suites.size() == 2);
  CHECK(r.suites[0].suite == "onepoint");  // registry order
  CHECK(r.suites[1].suite == "slepian");
  CHECK(r.pass());

  const auto j = to_json(r);
  CHECK(j["pass"] == true);
  CHECK(j["summary"].size() == 2);
  for (const auto& c : j["checks"])
    for (const char* key : {"suite", "check", "inputs-digest", "expected", "got", "pass", "tolerance"})
      CHECK_MESSAGE(c.contains(key), key);
  CHECK(to_json(run_all_suites(cfg)).dump() == j.dump());

  cfg.suites = std::vector<std::string>{"nonsense"};
  CHECK_THROWS_AS(run_all_suites(cfg), ConfigError);
  CHECK_THROWS_AS(run_suite("nonsense", {}), ConfigError);
}

TEST_CASE("fast numeric batteries") {
  const SuiteOptions opt;
  for (const char* name : {"matrix_tree", "rerooting", "schur", "twopoint"}) {
    const auto r = run_suite(name, opt);
    CHECK_MESSAGE(r.pass(), name);
    for (const auto& c : r.checks) CHECK_FALSE(c.exact);
  }
  CHECK(matrix_tree_suite(opt).size() == 200);
}
