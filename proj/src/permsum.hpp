// Evaluation of I(n, d, p) as a signed sum of gamma-factor products over
// d-tuples of permutations.  Tuples are enumerated with the first slot pinned
// to the identity (right-composing every slot by a common permutation fixes
// the summand, so the full sum is n! times the pinned one) and coalesced by
// their sorted column-sum vectors before any gamma evaluation.
#pragma once

#include <map>
#include <vector>

#include "halfint.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace selberg {

struct Arrangement {
  std::vector<std::vector<int>> perms;  // d permutations, one-based images
  int sign = 1;                         // product of the permutation signs
  std::vector<int> column_sums;         // position i holds sum_k perms[k][i]
};

// All permutations of 1..n in lexicographic order (identity first).
std::vector<std::vector<int>> all_permutations(int n);
int permutation_sign(const std::vector<int>& perm);

Arrangement make_arrangement(std::vector<std::vector<int>> perms);

// Every d-tuple of permutations of 1..n; intended for exhaustive checks at
// desk scale.
std::vector<Arrangement> all_arrangements(int n, int d);

struct GammaVector {
  std::vector<int> gamma;    // column sums sorted ascending
  std::vector<HalfInt> mu;   // mu[i] = gamma[i] - d(i+1)/2, zero-based i
};

// Sorted column sums with their offsets mu[i] = gamma[i] - d(i+2)/2
// (zero-based i).  The lower bound gamma[i] >= d(i+2)/2 holds for every
// arrangement, so a violation is an internal error.
GammaVector gamma_vector(const Arrangement& arr);

// Sorted-column-sum vector -> signed multiplicity over all d-tuples (first
// slot pinned to the identity when fix_first).  threads <= 0 picks a default;
// small enumerations stay serial.
using SortedSumCounts = std::map<std::vector<int>, long>;
SortedSumCounts coalesced_column_sums(int n, int d, bool fix_first, int threads = 0);

// I(n, d, p) for even d; odd d is a usage error (the summand for odd d is not
// a finite product of gamma factors of this shape).
Rational eval_by_permutation_sum(int n, int d, int p, int threads = 0);

// The polynomial Phi with
//   sum over all d-tuples of sign * prod_i (p+1+d(i-1))_{2 mu_i}
// equal to Phi(p), for even d.  Degree d n(n-1)/4.
UniPoly phi_by_arrangement_sum(int n, int d, int threads = 0);

// Same polynomial from the n x n determinant of rising factorials
// (p - 1 + 2i)_{2j - 2}, times n!; only the kappa = 2 case has this form.
UniPoly phi_by_determinant(int n);

// Documented-discrepancy variants (see the errata module): the printed
// normalization divides by Gamma(n(p+1) + d n(n-1)/2 + 1) ...
Rational eval_perm_printed_normalization(int n, int d, int p);
// ... and the printed pochhammer bases read p + 1 + d(i+1).
UniPoly phi_printed_index(int n, int d);

}  // namespace selberg
