#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "hodgecc/errors.hpp"

namespace hodgecc {

using Integer = boost::multiprecision::cpp_int;

// Exact rationals, always stored gcd-reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Parses "n", "-n" or "n/d" (d > 0 after normalization). Throws parse_error.
Rational parse_rational(const std::string &text);

// Canonical form: "n" when the denominator is 1, else "n/d".
std::string to_string(const Rational &q);

Rational rational_pow(const Rational &q, long e); // q != 0 when e < 0

Integer factorial(unsigned n);

// C(n, k) for n >= 0; zero outside 0 <= k <= n.
Integer binomial(long n, long k);

} // namespace hodgecc
