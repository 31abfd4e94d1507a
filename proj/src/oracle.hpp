// Brute-force exact integration oracles.  Everything reduces to integrating
// monomials over the ordered simplex x_1 >= ... >= x_n >= 0, sum <= 1, by a
// linear change to the standard simplex followed by a stick-breaking chart
// that makes each coordinate integral a one-dimensional Beta integral.  These
// routines are deliberately independent of the structured evaluators they
// arbitrate.
#pragma once

#include <atomic>
#include <map>
#include <mutex>
#include <unordered_map>

#include "multipoly.hpp"
#include "rational.hpp"
#include "sympoly.hpp"

namespace selberg {

// Desk-scale limits for the brute-force routes; exceeding them is a resource
// error so a typo cannot start a week-long expansion.
struct OracleGuard {
  int max_n = 4;
  int max_d = 4;
  int max_p = 6;
};

class OracleMemo {
 public:
  // int_0^1 t^c (1-t)^b dt = c! b! / (c+b+1)!.
  Rational beta1(int c, int b);
  bool lookup(const Exponents& e, Rational& out) const;
  void store(const Exponents& e, const Rational& value);

  std::atomic<size_t> last_term_count{0};  // telemetry: monomials in last poly

 private:
  std::map<std::pair<int, int>, Rational> beta_;
  std::unordered_map<Exponents, Rational, ExponentsHash> simplex_;
  mutable std::mutex mutex_;
};

// Integral of x^a over the ordered simplex; a may not be negative.
Rational integrate_monomial_simplex(const Exponents& a, OracleMemo* memo = nullptr);

Rational integrate_poly_simplex(const MultiPoly& f, OracleMemo* memo = nullptr);

// Dirichlet integral of a symmetric polynomial over x_i >= 0, sum <= 1;
// asymmetric input is a usage error.
Rational integrate_symmetric_orthant(const MultiPoly& f);

// I(n, d, p): integral over the ordered simplex of
// (x_1...x_n)^p prod_{i<j}(x_i^2 - x_j^2)^d.  For even d the value is
// cross-checked against the unordered-domain route divided by n!.
Rational oracle_I(int n, int d, int p, const OracleGuard& guard = {},
                  OracleMemo* memo = nullptr);

// J(n, kappa, f): integral over the ordered simplex of
// f * prod_{i<j}(x_i - x_j)^kappa for symmetric f in n variables.
Rational oracle_J(int n, int kappa, const SymPoly& f, const OracleGuard& guard = {},
                  OracleMemo* memo = nullptr);

}  // namespace selberg
