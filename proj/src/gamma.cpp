#include "gamma.hpp"

namespace selberg {

std::string GammaValue::to_string() const {
  if (is_zero()) return "0";
  std::string c = rational_to_string(coefficient);
  if (sqrt_pi_power == 0) return c;
  std::string pi = sqrt_pi_power == 1 ? "sqrt(pi)"
                                      : "sqrt(pi)^" + std::to_string(sqrt_pi_power);
  if (coefficient == 1) return pi;
  return c + "*" + pi;
}

GammaValue gamma_half(const HalfInt& arg) {
  check_usage(arg.is_positive(),
              "gamma evaluated at nonpositive argument " + arg.to_string());
  if (arg.is_integer()) {
    // gamma(k) = (k-1)!
    unsigned long k = static_cast<unsigned long>(arg.integer_value());
    return GammaValue(Rational(factorial_int(k - 1)), 0);
  }
  // arg = k + 1/2 with k >= 0: gamma = (2k)! / (4^k k!) sqrt(pi).
  unsigned long k = static_cast<unsigned long>((arg.twice_value - 1) / 2);
  Integer four_pow_k;
  mpz_ui_pow_ui(four_pow_k.get_mpz_t(), 4, k);
  Rational c(factorial_int(2 * k), four_pow_k * factorial_int(k));
  c.canonicalize();
  return GammaValue(c, 1);
}

Rational pochhammer(const Rational& base, long count) {
  check_usage(count >= 0, "pochhammer with negative count");
  Rational result = 1;
  Rational term = base;
  for (long i = 0; i < count; ++i) {
    result *= term;
    term += 1;
  }
  return result;
}

GammaValue beta_half(const HalfInt& a, const HalfInt& b) {
  return gamma_half(a) * gamma_half(b) / gamma_half(a + b);
}

}  // namespace selberg
