// Exact rational numbers over GMP.
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wca {

/// Field elements. mpq_class keeps values in lowest terms with a positive
/// denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Renders as "p" or "p/q".
std::string to_string(const Rational& q);

/// n! as a rational, n >= 0.
Rational factorial(int n);

/// Falling factorial n (n-1) ... (n-k+1); 1 for k == 0.
Rational falling_factorial(int n, int k);

Rational binomial(int n, int k);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace wca
