// Exact values of the gamma function at positive half-integers.  Such a value
// is always (rational) * sqrt(pi)^k with k in {0,1}, so products and quotients
// of them live in the ring of rationals adjoined sqrt(pi), represented here as
// GammaValue {coefficient, sqrt_pi_power}.
#pragma once

#include <string>

#include "error.hpp"
#include "halfint.hpp"
#include "rational.hpp"

namespace selberg {

struct GammaValue {
  Rational coefficient = 0;
  long sqrt_pi_power = 0;  // zero whenever coefficient is zero

  GammaValue() = default;
  GammaValue(Rational c, long spp) : coefficient(std::move(c)), sqrt_pi_power(spp) {
    if (coefficient == 0) sqrt_pi_power = 0;
  }
  static GammaValue one() { return GammaValue(Rational(1), 0); }

  bool is_zero() const { return coefficient == 0; }
  bool is_rational() const { return sqrt_pi_power == 0; }
  // Pre: sqrt(pi) fully cancelled.
  Rational rational_value() const {
    check_internal(is_rational(), "sqrt(pi) failed to cancel in exact evaluation");
    return coefficient;
  }

  GammaValue operator*(const GammaValue& o) const {
    Rational c = coefficient * o.coefficient;
    return GammaValue(c, c == 0 ? 0 : sqrt_pi_power + o.sqrt_pi_power);
  }
  GammaValue operator/(const GammaValue& o) const {
    check_internal(!o.is_zero(), "division by zero GammaValue");
    Rational c = coefficient / o.coefficient;
    return GammaValue(c, c == 0 ? 0 : sqrt_pi_power - o.sqrt_pi_power);
  }
  GammaValue& operator*=(const GammaValue& o) { return *this = *this * o; }
  GammaValue& operator/=(const GammaValue& o) { return *this = *this / o; }
  // Addition requires matching sqrt(pi) powers (or a zero side).
  GammaValue operator+(const GammaValue& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    check_internal(sqrt_pi_power == o.sqrt_pi_power, "adding mixed sqrt(pi) powers");
    return GammaValue(coefficient + o.coefficient, sqrt_pi_power);
  }
  GammaValue scaled(const Rational& r) const {
    Rational c = coefficient * r;
    return GammaValue(c, c == 0 ? 0 : sqrt_pi_power);
  }
  bool operator==(const GammaValue& o) const {
    return coefficient == o.coefficient && sqrt_pi_power == o.sqrt_pi_power;
  }

  std::string to_string() const;
};

// Gamma at a positive half-integer: gamma_half(1/2) = sqrt(pi),
// gamma_half(2) = 1, gamma_half(5/2) = 3/4 sqrt(pi).
// Nonpositive argument -> usage error (pole or undefined).
GammaValue gamma_half(const HalfInt& arg);

// Rising factorial base(base+1)...(base+count-1); count >= 0, count 0 -> 1.
Rational pochhammer(const Rational& base, long count);

// beta_half(a, b) = gamma_half(a) gamma_half(b) / gamma_half(a + b).
GammaValue beta_half(const HalfInt& a, const HalfInt& b);

}  // namespace selberg
