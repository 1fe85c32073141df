#include "h22/verify/identity_check.hpp"

#include <cmath>
#include <cstdio>

namespace h22::verify {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex_digest(std::string_view text) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
  return buf;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string format_bound(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

IdentityCheck exact_zero(std::string suite, std::string name, std::string inputs, const susy::SuperNumber& residual) {
  return {std::move(suite), std::move(name), std::move(inputs), "0", residual.to_string(), true, 0.0, residual.is_zero()};
}

IdentityCheck exact_equal(std::string suite, std::string name, std::string inputs, const susy::Rational& expected,
                          const susy::Rational& got) {
  return {std::move(suite), std::move(name), std::move(inputs), expected.get_str(), got.get_str(), true, 0.0,
          expected == got};
}

IdentityCheck exact_equal(std::string suite, std::string name, std::string inputs, const susy::SuperNumber& expected,
                          const susy::SuperNumber& got) {
  return {std::move(suite), std::move(name), std::move(inputs), expected.to_string(), got.to_string(), true, 0.0,
          expected == got};
}

IdentityCheck numeric_close(std::string suite, std::string name, std::string inputs, double expected, double got,
                            double tolerance) {
  const bool ok = std::abs(got - expected) <= tolerance;
  return {std::move(suite), std::move(name), std::move(inputs), format_double(expected) + " +- " + format_bound(tolerance),
          format_double(got), false, tolerance, ok};
}

IdentityCheck numeric_at_most(std::string suite, std::string name, std::string inputs, double bound, double got) {
  return {std::move(suite), std::move(name), std::move(inputs), "<= " + format_bound(bound), format_double(got), false,
          bound, got <= bound};
}

IdentityCheck predicate(std::string suite, std::string name, std::string inputs, std::string expected, std::string got,
                        bool pass) {
  return {std::move(suite), std::move(name), std::move(inputs), std::move(expected), std::move(got), false, 0.0, pass};
}

}  // namespace h22::verify
