#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hdx {

using Int = mpz_class;
using Rational = mpq_class;

/// n! as an exact integer. Requires n >= 0.
Int factorial(long n);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Int binomial(long n, long k);

/// Harmonic partial sum 1/a + 1/(a+1) + ... + 1/b; zero when a > b.
Rational harmonic(long a, long b);

Rational make_rational(const Int& num, const Int& den);

double to_double(const Rational& q);

/// Canonical "p/q" form with q > 0.
std::string rational_str(const Rational& q);

/// Accepts "p", "p/q", and plain decimals like "-0.25". Exact conversion.
Rational parse_rational(const std::string& text);

}  // namespace hdx
