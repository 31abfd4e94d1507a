// Symbolic closed form in an integer parameter p:
//
//   coefficient * sqrt(pi)^sqrt_pi_power * phi(p)
//     * prod_i Gamma(p + shift_i) / Gamma(stretch*p + offset)
//
// with each shift a positive half-integer.  Evaluation at a concrete p is
// exact and must end rational: any residual sqrt(pi) is an internal error.
#pragma once

#include <string>
#include <vector>

#include "gamma.hpp"
#include "halfint.hpp"
#include "unipoly.hpp"

namespace selberg {

struct ClosedForm {
  Rational coefficient = 1;
  long sqrt_pi_power = 0;
  std::vector<HalfInt> numerator_gamma_shifts;  // factors Gamma(p + shift)
  long denominator_stretch = 0;                 // Gamma(stretch*p + offset); stretch 0, offset 1
  long denominator_offset = 1;                  // makes the denominator the neutral Gamma(1)
  UniPoly phi = UniPoly::one();

  bool operator==(const ClosedForm& o) const {
    return coefficient == o.coefficient && sqrt_pi_power == o.sqrt_pi_power &&
           numerator_gamma_shifts == o.numerator_gamma_shifts &&
           denominator_stretch == o.denominator_stretch &&
           denominator_offset == o.denominator_offset && phi == o.phi;
  }
};

// Exact evaluation at integer p >= 0.  Gamma at a nonpositive argument is a
// usage error; a non-rational result is an internal error.
Rational closedform_eval(const ClosedForm& cf, long p);

std::string closedform_to_string(const ClosedForm& cf);
std::string closedform_to_latex(const ClosedForm& cf);

}  // namespace selberg
