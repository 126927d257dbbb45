#pragma once

#include <gmpxx.h>

#include <string>

namespace trop {

// Exact rational scalar. Every matrix entry, split weight and length in this
// library is a Rational; there is no floating point anywhere. GMP keeps
// values reduced with positive denominator once canonicalized, so all
// construction goes through the helpers below.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts an optional sign, digits, and an optional "/digits" part.
// Everything else (floats, NaN, exponents, whitespace) is rejected.
Rational parse_rational(const std::string& token);

// "p" for integers, "p/q" otherwise; q > 0 and gcd(|p|, q) = 1.
std::string rational_str(const Rational& q);

}  // namespace trop
