#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tropgw {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point of R^N with exact rational coordinates.
using RationalPoint = std::vector<Rational>;

/// Parses "p", "-p" or "p/q". Throws Error(Parse) on malformed input or q == 0.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational &value);
std::string to_string(const Integer &value);
std::string to_string(const RationalPoint &point);

RationalPoint add(const RationalPoint &a, const RationalPoint &b);
RationalPoint subtract(const RationalPoint &a, const RationalPoint &b);
RationalPoint scale(const RationalPoint &a, const Rational &factor);

Integer abs(const Integer &value);
Integer gcd(const Integer &a, const Integer &b);

} // namespace tropgw
