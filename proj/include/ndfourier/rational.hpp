#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ndf {

// Exact rational with arbitrary-precision numerator and denominator.
// mpq_class keeps values canonical (positive denominator, reduced) as long
// as every construction from raw parts goes through make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

// Parses "p/q", "p" and, when allow_decimal is set, "d.ddd" (read as an exact
// decimal fraction). Throws ParseError on anything else.
Rational parse_rational(std::string_view text, bool allow_decimal = false);

// "p/q", or "p" for integers.
std::string to_string(const Rational& q);

// Decimal rendering rounded to `digits` significant digits.
std::string to_decimal(const Rational& q, int digits = 20);

Integer floor_of(const Rational& q);

// 2^e for any integer e.
Rational pow2(long e);

bool is_dyadic(const Rational& q);

}  // namespace ndf
