#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace lgcy {

/// Exact rational number. GMP keeps it canonical: gcd(num, den) = 1, den > 0.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical rational num/den; throws std::domain_error on den == 0.
Rational rat(long num, long den = 1);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

/// Rising factorial (x)_n = x (x+1) ... (x+n-1), with (x)_0 = 1.
Rational pochhammer(const Rational& x, unsigned long n);

/// Bernoulli number B_n with B_1 = -1/2 (so B_2 = 1/6, B_4 = -1/30, ...).
Rational bernoulli(unsigned n);

Rational pow(const Rational& base, unsigned long exponent);

/// Always "num/den", e.g. "5/1". Used for serialization.
std::string to_fraction_string(const Rational& value);
/// "5" for integers, "-1/24" otherwise.
std::string to_string(const Rational& value);

/// Accepts "n", "n/d" or "-n/d"; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace lgcy
