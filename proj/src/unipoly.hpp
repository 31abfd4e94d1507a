// Univariate polynomials with exact rational coefficients, dense ascending
// storage with no trailing zeros.  The variable is conventionally called p.
#pragma once

#include <string>
#include <vector>

#include "rational.hpp"

namespace selberg {

class UniPoly {
 public:
  UniPoly() = default;  // zero polynomial
  explicit UniPoly(std::vector<Rational> ascending_coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly one() { return constant(Rational(1)); }
  static UniPoly variable();  // p

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const Rational& r) const;
  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

  Rational eval(const Rational& p) const;

  std::string to_string(const std::string& var = "p") const;
  std::string to_latex(const std::string& var = "p") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Rising factorial of a polynomial argument: poly (poly+1) ... (poly+count-1).
UniPoly pochhammer(const UniPoly& base, long count);

// Unique polynomial of degree < nodes.size() through (nodes[i], values[i]),
// computed by Newton divided differences.  Node values must be distinct.
UniPoly interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values);

}  // namespace selberg
