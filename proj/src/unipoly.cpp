#include "unipoly.hpp"

#include <algorithm>

#include "error.hpp"

namespace selberg {

UniPoly::UniPoly(std::vector<Rational> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
  trim();
}

UniPoly UniPoly::constant(const Rational& c) {
  return UniPoly(std::vector<Rational>{c});
}

UniPoly UniPoly::variable() {
  return UniPoly(std::vector<Rational>{Rational(0), Rational(1)});
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + o.scaled(Rational(-1)); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rational& r) const {
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x *= r;
  return UniPoly(std::move(c));
}

Rational UniPoly::eval(const Rational& p) const {
  Rational v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    v = v * p + *it;
  }
  return v;
}

namespace {

std::string format_terms(const UniPoly& poly, const std::string& var, bool latex) {
  if (poly.is_zero()) return "0";
  std::string out;
  for (long k = poly.degree(); k >= 0; --k) {
    Rational c = poly.coefficient(static_cast<size_t>(k));
    if (c == 0) continue;
    bool first = out.empty();
    bool negative = c < 0;
    Rational a = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mag = latex ? rational_to_latex(a) : rational_to_string(a);
    bool need_coeff = (a != 1) || k == 0;
    if (need_coeff) out += mag;
    if (k > 0) {
      out += var;
      if (k > 1) {
        out += latex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k);
      }
    }
  }
  return out;
}

}  // namespace

std::string UniPoly::to_string(const std::string& var) const {
  return format_terms(*this, var, false);
}

std::string UniPoly::to_latex(const std::string& var) const {
  return format_terms(*this, var, true);
}

UniPoly pochhammer(const UniPoly& base, long count) {
  check_usage(count >= 0, "pochhammer with negative count");
  UniPoly result = UniPoly::one();
  UniPoly term = base;
  for (long i = 0; i < count; ++i) {
    result = result * term;
    term = term + UniPoly::one();
  }
  return result;
}

UniPoly interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values) {
  check_internal(nodes.size() == values.size() && !nodes.empty(),
                 "interpolation needs matching nonempty node/value lists");
  size_t n = nodes.size();
  // Divided-difference table, in place.
  std::vector<Rational> dd(values);
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = n - 1; i >= level; --i) {
      Rational denom = nodes[i] - nodes[i - level];
      check_internal(denom != 0, "interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / denom;
    }
  }
  // Horner-style expansion of the Newton form.
  UniPoly result = UniPoly::constant(dd[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    UniPoly shift = UniPoly::variable() - UniPoly::constant(nodes[i]);
    result = result * shift + UniPoly::constant(dd[i]);
  }
  return result;
}

}  // namespace selberg
