#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace rdalg {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact fraction with positive denominator, always kept in lowest terms.
/// GMP canonicalizes after every arithmetic operation; values built from
/// raw numerator/denominator pairs go through make_rational.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

/// "p/q" or "p"; an optional leading '-' is accepted.
Rational parse_rational(std::string_view text);

/// Integers print without a denominator.
std::string to_string(const Rational& value);

Integer factorial(unsigned n);

}  // namespace rdalg
