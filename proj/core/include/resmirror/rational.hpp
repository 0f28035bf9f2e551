#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace resmirror {

using Integer = mpz_class;
using Rational = mpq_class;

// "num/den", den omitted when 1.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

// n/d in lowest terms; the two-argument mpq_class constructor does not reduce.
Rational frac(long n, long d);
Rational factorial(long n);
// Generalized binomial coefficient; n may be negative.
Rational binomial(long n, long k);
Rational pow(const Rational& base, long exp);

}  // namespace resmirror
