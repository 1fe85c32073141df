#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "h22/superalgebra/supernumber.hpp"

namespace h22::verify {

/// One checked identity. Exact checks compare canonical SuperNumbers or
/// rationals (tolerance 0); numeric checks carry their tolerance.
struct IdentityCheck {
  std::string suite;
  std::string name;
  std::string inputs;
  std::string expected;
  std::string got;
  bool exact = true;
  double tolerance = 0.0;
  bool pass = false;
};

/// 64-bit FNV-1a, printed as 16 hex digits.
std::uint64_t fnv1a(std::string_view text);
std::string hex_digest(std::string_view text);

IdentityCheck exact_zero(std::string suite, std::string name, std::string inputs, const susy::SuperNumber& residual);
IdentityCheck exact_equal(std::string suite, std::string name, std::string inputs, const susy::Rational& expected,
                          const susy::Rational& got);
IdentityCheck exact_equal(std::string suite, std::string name, std::string inputs, const susy::SuperNumber& expected,
                          const susy::SuperNumber& got);
/// |got - expected| <= tolerance.
IdentityCheck numeric_close(std::string suite, std::string name, std::string inputs, double expected, double got,
                            double tolerance);
/// got <= bound.
IdentityCheck numeric_at_most(std::string suite, std::string name, std::string inputs, double bound, double got);
/// A boolean outcome with a free-form description of what was observed.
IdentityCheck predicate(std::string suite, std::string name, std::string inputs, std::string expected, std::string got,
                        bool pass);

std::string format_double(double v);  // %.17g

}  // namespace h22::verify
