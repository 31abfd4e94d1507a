// Rational, half-integer, gamma-value, univariate-polynomial, and
// closed-form arithmetic.
#include "doctest.h"

#include "closedform.hpp"
#include "error.hpp"
#include "gamma.hpp"
#include "halfint.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

using namespace selberg;

TEST_CASE("rationals are canonical and parse strictly") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(-2, -4) == make_rational(1, 2));
  CHECK(rational_to_string(make_rational(-3, 4)) == "-3/4");
  CHECK(rational_to_string(Rational(7)) == "7");
  CHECK(rational_to_fraction_string(Rational(5)) == "5/1");
  CHECK(rational_from_string("22/7") == make_rational(22, 7));
  CHECK(rational_from_string("-6/4") == make_rational(-3, 2));
  CHECK(rational_from_string("0") == 0);
  CHECK_THROWS_AS(rational_from_string("1/0"), Error);
  CHECK_THROWS_AS(rational_from_string("abc"), Error);
  CHECK_THROWS_AS(rational_from_string(""), Error);
  CHECK_THROWS_AS(make_rational(1, 0), Error);
  CHECK(rational_to_latex(make_rational(-3, 4)) == "-\\frac{3}{4}");
  CHECK(rational_to_latex(Rational(7)) == "7");
}

TEST_CASE("integer helpers") {
  CHECK(factorial_int(0) == 1);
  CHECK(factorial_int(5) == 120);
  CHECK(binomial_int(5, 2) == 10);
  CHECK(binomial_int(3, 5) == 0);
  CHECK(binomial_int(6, 0) == 1);
  CHECK(rational_pow(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK(rational_pow(Rational(5), 0) == 1);
  CHECK(rational_to_long(Rational(42)) == 42);
  CHECK_THROWS_AS(rational_pow(Rational(0), -1), Error);
}

TEST_CASE("half-integers") {
  HalfInt h = HalfInt::from_twice(5);
  CHECK(!h.is_integer());
  CHECK(h.to_string() == "5/2");
  CHECK(h.to_latex() == "\\tfrac{5}{2}");
  CHECK(HalfInt(3).to_string() == "3");
  CHECK(HalfInt(3).integer_value() == 3);
  CHECK((h + 1).twice_value == 7);
  CHECK((h - HalfInt::from_twice(3)).twice_value == 2);
  CHECK(h.to_rational() == make_rational(5, 2));
  CHECK(HalfInt(2) < HalfInt::from_twice(5));
  CHECK_THROWS_AS(h.integer_value(), Error);
}

TEST_CASE("gamma at half-integers") {
  CHECK(gamma_half(HalfInt::from_twice(1)) == GammaValue(Rational(1), 1));
  CHECK(gamma_half(HalfInt(1)) == GammaValue::one());
  CHECK(gamma_half(HalfInt(2)) == GammaValue::one());
  CHECK(gamma_half(HalfInt(5)) == GammaValue(Rational(24), 0));
  CHECK(gamma_half(HalfInt::from_twice(5)) == GammaValue(make_rational(3, 4), 1));
  CHECK(gamma_half(HalfInt::from_twice(7)) == GammaValue(make_rational(15, 8), 1));
  CHECK(gamma_half(HalfInt::from_twice(9)) == GammaValue(make_rational(105, 16), 1));
  CHECK_THROWS_AS(gamma_half(HalfInt(0)), Error);
  CHECK_THROWS_AS(gamma_half(HalfInt::from_twice(-3)), Error);
}

TEST_CASE("gamma-value algebra tracks sqrt(pi) exactly") {
  GammaValue root = gamma_half(HalfInt::from_twice(1));
  GammaValue pi = root * root;
  CHECK(pi == GammaValue(Rational(1), 2));
  CHECK((pi / root) == root);
  CHECK_THROWS_AS(pi.rational_value(), Error);
  CHECK((root + GammaValue()) == root);
  CHECK_THROWS_AS(root + GammaValue::one(), Error);
  CHECK(root.scaled(Rational(0)).is_zero());
  CHECK(root.scaled(Rational(0)).sqrt_pi_power == 0);
  CHECK(GammaValue(make_rational(1, 40), -1).to_string() == "1/40*sqrt(pi)^-1");
  CHECK(GammaValue(Rational(1), 1).to_string() == "sqrt(pi)");
  CHECK(beta_half(HalfInt::from_twice(1), HalfInt::from_twice(1)) ==
        GammaValue(Rational(1), 2));
  CHECK(beta_half(HalfInt(1), HalfInt(1)) == GammaValue::one());
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(make_rational(1, 2), 3) == make_rational(15, 8));
  CHECK(pochhammer(Rational(3), 0) == 1);
  CHECK(pochhammer(Rational(1), 5) == 120);
}

TEST_CASE("univariate polynomials") {
  UniPoly p = UniPoly::variable();
  UniPoly q = (p + UniPoly::one()) * (p + UniPoly::constant(Rational(2)));
  CHECK(q.degree() == 2);
  CHECK(q.coefficient(0) == 2);
  CHECK(q.coefficient(1) == 3);
  CHECK(q.coefficient(2) == 1);
  CHECK(q.eval(Rational(3)) == 20);
  CHECK(UniPoly().degree() == -1);
  CHECK(UniPoly(std::vector<Rational>{Rational(1), Rational(0)}).degree() == 0);
  CHECK((q - q).is_zero());
  CHECK(q.scaled(Rational(2)).coefficient(1) == 6);

  UniPoly phi(std::vector<Rational>{Rational(20), Rational(8)});
  CHECK(phi.to_string() == "8p + 20");
  CHECK(UniPoly(std::vector<Rational>{Rational(0), Rational(-1)}).to_string() == "-p");
  UniPoly threehalves(std::vector<Rational>{Rational(0), Rational(0), make_rational(3, 2)});
  CHECK(threehalves.to_latex() == "\\frac{3}{2}p^{2}");

  CHECK(pochhammer(p + UniPoly::one(), 2) == q);
}

TEST_CASE("interpolation recovers exact polynomials") {
  UniPoly target(std::vector<Rational>{Rational(7), make_rational(-3, 2), Rational(5)});
  std::vector<Rational> nodes{Rational(0), Rational(1), Rational(2)};
  std::vector<Rational> values;
  for (const Rational& x : nodes) values.push_back(target.eval(x));
  CHECK(interpolate(nodes, values) == target);
  CHECK(interpolate({Rational(4)}, {Rational(9)}) == UniPoly::constant(Rational(9)));
}

TEST_CASE("closed forms evaluate exactly") {
  // 2 Gamma(p + 5/2) Gamma(p + 1) / (sqrt(pi) Gamma(2p + 5))
  ClosedForm cf;
  cf.coefficient = 2;
  cf.sqrt_pi_power = -1;
  cf.numerator_gamma_shifts = {HalfInt::from_twice(5), HalfInt(1)};
  cf.denominator_stretch = 2;
  cf.denominator_offset = 5;
  CHECK(closedform_eval(cf, 0) == make_rational(1, 16));
  CHECK(closedform_eval(cf, 1) == make_rational(1, 192));
  CHECK(closedform_to_string(cf) ==
        "2 Gamma(p + 5/2) Gamma(p + 1) / (sqrt(pi) Gamma(2p + 5))");
  CHECK(closedform_to_latex(cf) ==
        "\\frac{2\\,\\Gamma(p + \\tfrac{5}{2})\\,\\Gamma(p + 1)}"
        "{\\sqrt{\\pi}\\,\\Gamma(2p + 5)}");

  ClosedForm trivial;  // the neutral form is the constant 1
  CHECK(closedform_eval(trivial, 3) == 1);
  CHECK(closedform_to_string(trivial) == "1");

  ClosedForm withphi = cf;
  withphi.phi = UniPoly(std::vector<Rational>{Rational(20), Rational(8)});
  CHECK(closedform_eval(withphi, 0) == make_rational(20, 16));
  CHECK(closedform_to_string(withphi) ==
        "2 (8p + 20) Gamma(p + 5/2) Gamma(p + 1) / (sqrt(pi) Gamma(2p + 5))");
}
