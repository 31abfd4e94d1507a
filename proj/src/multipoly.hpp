// Multivariate polynomials with exact rational coefficients, stored sparsely
// as exponent-vector -> coefficient.  Exponent vectors always have length
// nvars.  This is the expansion engine behind the brute-force integrators and
// the symmetric-function code.
#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "rational.hpp"

namespace selberg {

using Exponents = std::vector<int>;

struct ExponentsHash {
  size_t operator()(const Exponents& e) const {
    size_t h = 1469598103934665603ull;
    for (int x : e) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

class MultiPoly {
 public:
  using TermMap = std::unordered_map<Exponents, Rational, ExponentsHash>;

  explicit MultiPoly(int nvars) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly monomial(Exponents e, const Rational& c);
  static MultiPoly variable(int nvars, int index);  // x_index, zero-based

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  long total_degree() const;  // max over terms; -1 for zero

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Rational& r) const;
  MultiPoly pow(int k) const;
  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  Rational eval(const std::vector<Rational>& point) const;

 private:
  int nvars_;
  TermMap terms_;
};

// prod_{i<j} (x_i - x_j) on n variables.
MultiPoly vandermonde_product(int n);

// prod_{i<j} (x_i^2 - x_j^2)^d on n variables; n = 1 gives the constant 1.
MultiPoly squared_difference_product(int n, int d);

}  // namespace selberg
