#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace chow {

using Rational = mpq_class;
using Integer = mpz_class;

/// Prints `p` for integers and `p/q` otherwise (q > 0, reduced).
std::string to_string(const Rational& q);

/// Accepts `p` or `p/q` with an optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// C(a, b), zero whenever b < 0 or b > a.
Integer binomial(long a, long b);

inline Rational sign_power(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

Rational factorial(unsigned n);

}  // namespace chow
