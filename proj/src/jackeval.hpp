// Structured evaluation of I(n, d, p) through Jack polynomials with parameter
// alpha = 2/d: the even-difference product expands exactly into Jack
// polynomials of weight d n(n-1)/2, and each basis element integrates against
// (x_1...x_n)^p to an explicit ratio of gamma factors.  Summing terms gives
// exact values; interpolating the residual polynomial gives the closed form.
#pragma once

#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "closedform.hpp"
#include "gamma.hpp"
#include "jack.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace selberg {

struct Workspace;

struct JackExpansion {
  int n = 0;
  int d = 0;
  Rational alpha;                                   // 2/d in lowest terms
  std::vector<std::pair<Partition, Rational>> terms;  // dominance-largest first
};

class ExpansionCache {
 public:
  const JackExpansion* lookup(int n, int d) const;
  const JackExpansion& store(int n, int d, JackExpansion expansion);

 private:
  std::map<std::pair<int, int>, JackExpansion> map_;
  mutable std::shared_mutex mutex_;
};

// Coefficients of prod_{i<j}(x_i + x_j)^d on the Jack basis at alpha = 2/d,
// found by eliminating the dominance-largest remaining term; every partition
// that appears is dominated by d * staircase and bounded below, part by part,
// by minimal_parts(n, d).
const JackExpansion& expand_sdelta_power(int n, int d, Workspace& ws);

// Part-wise lower bound floor((d(n-i)+1)/2), one entry per variable.
std::vector<int> minimal_parts(int n, int d);

// prod_{i<j} Gamma(lambda_i - lambda_j + d(j-i+1)/2)
//          / Gamma(lambda_i - lambda_j + d(j-i)/2), lambda padded to n parts.
GammaValue v_lambda(const Partition& lambda, int n, int d);
// Same with the pair distance scaled by scale_twice/2 instead of d; used by
// the errata fixtures.
GammaValue v_lambda_general(const Partition& lambda, int n, long scale_twice);

// Integral of the Jack basis element times (x_1...x_n)^p as a closed form in
// p, and its exact value at one p.
ClosedForm jack_basis_closed_form(const Partition& lambda, int n, int d);
Rational jack_basis_integral(const Partition& lambda, int n, int d, int p);

// Exact value of I(n, d, p) by summing the expansion against the basis
// integrals.
Rational eval_by_jack_expansion(int n, int d, int p, Workspace& ws);

// Upper bound for the degree of the residual polynomial in the closed form:
// d n(n-1)/4 for even d, minus floor(n/2)/2 for odd d (always an integer).
long phi_degree_bound(int n, int d);

// Closed form of I(n, d, .) with the gamma shifts pushed as high as the
// part-wise minima allow; the residual polynomial is found by interpolation
// at p = 0..bound and verified at two further nodes.
ClosedForm closed_form_by_jack(int n, int d, Workspace& ws);

// Documented-discrepancy variants (see the errata module).
Rational jack_basis_integral_printed_shift(const Partition& lambda, int n, int d, int p);
Rational eval_printed_prefactor(int n, int d, int p, Workspace& ws);
GammaValue eval_printed_half_scale(int n, int d, int p, Workspace& ws);
ClosedForm closed_form_loose_shifts(int n, int d, Workspace& ws);

}  // namespace selberg
