#include "closedform.hpp"

#include "error.hpp"

namespace selberg {

Rational closedform_eval(const ClosedForm& cf, long p) {
  GammaValue acc(cf.coefficient, cf.sqrt_pi_power);
  acc = acc.scaled(cf.phi.eval(Rational(p)));
  if (acc.is_zero()) return Rational(0);
  for (const HalfInt& shift : cf.numerator_gamma_shifts) {
    acc *= gamma_half(shift + p);
  }
  if (!(cf.denominator_stretch == 0 && cf.denominator_offset == 1)) {
    acc /= gamma_half(HalfInt(cf.denominator_stretch * p + cf.denominator_offset));
  }
  return acc.rational_value();
}

namespace {

// "p + 5/2", "2p + 7", "p", "p - 1".
std::string gamma_arg(long stretch, const HalfInt& shift, bool latex) {
  std::string out;
  if (stretch != 0) {
    if (stretch != 1) out += std::to_string(stretch);
    out += "p";
  }
  if (shift.twice_value != 0) {
    HalfInt mag = shift.twice_value < 0 ? HalfInt::from_twice(-shift.twice_value) : shift;
    if (!out.empty()) out += shift.twice_value < 0 ? " - " : " + ";
    else if (shift.twice_value < 0) out += "-";
    out += latex ? mag.to_latex() : mag.to_string();
  }
  if (out.empty()) out = "0";
  return out;
}

std::string render(const ClosedForm& cf, bool latex) {
  const std::string gamma = latex ? "\\Gamma" : "Gamma";
  const std::string sqrt_pi = latex ? "\\sqrt{\\pi}" : "sqrt(pi)";
  const std::string sep = latex ? "\\," : " ";

  std::vector<std::string> num, den;
  if (cf.coefficient != 1) {
    num.push_back(latex ? rational_to_latex(cf.coefficient) : rational_to_string(cf.coefficient));
  }
  if (cf.phi.degree() > 0) {
    num.push_back(latex ? "\\left(" + cf.phi.to_latex() + "\\right)"
                        : "(" + cf.phi.to_string() + ")");
  } else if (!(cf.phi == UniPoly::one())) {
    num.push_back(latex ? cf.phi.to_latex() : cf.phi.to_string());
  }
  if (cf.sqrt_pi_power != 0) {
    long k = cf.sqrt_pi_power;
    std::string base = sqrt_pi;
    long mag = k < 0 ? -k : k;
    if (mag != 1) {
      base += latex ? "^{" + std::to_string(mag) + "}" : "^" + std::to_string(mag);
    }
    (k > 0 ? num : den).push_back(base);
  }
  for (const HalfInt& s : cf.numerator_gamma_shifts) {
    num.push_back(gamma + "(" + gamma_arg(1, s, latex) + ")");
  }
  if (!(cf.denominator_stretch == 0 && cf.denominator_offset == 1)) {
    den.push_back(gamma + "(" +
                  gamma_arg(cf.denominator_stretch, HalfInt(cf.denominator_offset), latex) + ")");
  }

  auto join = [&sep](const std::vector<std::string>& parts) {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) s += sep;
      s += parts[i];
    }
    return s;
  };

  std::string top = num.empty() ? "1" : join(num);
  if (den.empty()) return top;
  if (latex) return "\\frac{" + top + "}{" + join(den) + "}";
  std::string bottom = den.size() == 1 ? den[0] : "(" + join(den) + ")";
  return top + " / " + bottom;
}

}  // namespace

std::string closedform_to_string(const ClosedForm& cf) { return render(cf, false); }

std::string closedform_to_latex(const ClosedForm& cf) { return render(cf, true); }

}  // namespace selberg
