#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cpa {

/// Arbitrary-precision rational. GMP keeps it canonical: gcd(|p|, q) = 1,
/// q > 0, zero is 0/1.
using Rational = mpq_class;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& value);

/// Accepts an optional sign, decimal digits, and an optional "/digits"
/// denominator. Throws Error(Format) on anything else, including a zero
/// denominator. Locale independent.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace cpa
