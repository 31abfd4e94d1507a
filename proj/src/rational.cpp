#include "rational.hpp"

#include <cctype>

namespace selberg {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  std::string num = s, den = "1";
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  check_usage(all_digits(num) && all_digits(den),
              "malformed rational '" + text + "' (expected num or num/den)");
  Integer n(num), d(den);
  check_usage(d != 0, "rational with zero denominator: '" + text + "'");
  Rational r(n, d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

std::string rational_to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rational_to_latex(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  std::string sign = r < 0 ? "-" : "";
  Rational a = abs(r);
  return sign + "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

long rational_to_long(const Rational& r) {
  check_internal(is_integer(r), "rational_to_long on non-integer " + rational_to_string(r));
  check_internal(r.get_num().fits_slong_p(), "integer out of long range");
  return r.get_num().get_si();
}

Integer factorial_int(unsigned long n) {
  Integer z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return z;
}

Integer binomial_int(unsigned long n, unsigned long k) {
  Integer z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return z;
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  check_usage(base != 0 || exponent > 0, "zero base with negative exponent");
  unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  Rational r(num, den);
  r.canonicalize();
  if (exponent < 0) r = 1 / r;
  return r;
}

}  // namespace selberg
