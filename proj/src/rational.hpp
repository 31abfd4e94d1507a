// Exact rational arithmetic.  Thin helpers over GMP's mpq_class; values are
// always canonical (lowest terms, positive denominator) because every mutation
// goes through mpq canonicalization.
#pragma once

#include <gmpxx.h>

#include <string>

#include "error.hpp"

namespace selberg {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  check_usage(den != 0, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Strict parse of "num" or "num/den" with optional leading minus.
Rational rational_from_string(const std::string& text);

// "num/den" in lowest terms, or plain "num" when den == 1.
std::string rational_to_string(const Rational& r);

// Always "num/den", even for integers; used by the cache file format.
std::string rational_to_fraction_string(const Rational& r);

std::string rational_to_latex(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Pre: r is an integer that fits in long.
long rational_to_long(const Rational& r);

Integer factorial_int(unsigned long n);
Integer binomial_int(unsigned long n, unsigned long k);

// base^exponent with negative exponents allowed (base != 0 for those).
Rational rational_pow(const Rational& base, long exponent);

}  // namespace selberg
