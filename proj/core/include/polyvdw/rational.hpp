#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace polyvdw {

// Arbitrary-precision integers and exact rationals. cpp_rational keeps the
// canonical form invariant (denominator > 0, gcd(|num|, den) = 1), so
// structural equality is exact value equality.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Throws ConfigError when den == 0. Accepts any sign on either argument.
Rational make_rational(Int num, Int den);

// Strict "p" | "p/q" with optional leading sign on p and q > 0. Anything
// else (floats, exponents, empty) is a ConfigError — rationals cross every
// interface as strings, never as floating point.
Rational parse_rational(std::string_view text);

// Canonical "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);

// Floor of x as an integer (rounds toward minus infinity).
Int floor_rational(const Rational& x);

// 2^k for k >= 0.
Int pow2_int(int k);

}  // namespace polyvdw
