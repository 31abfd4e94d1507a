// Evaluation of J(n, kappa, f) by reduction in the variable count: splitting
// off the last variable turns the integral over the ordered simplex into a
// Beta-weighted sum of (n-1)-variable integrals whose integrands pick up the
// kappa-th power of the product of all remaining variables.
#pragma once

#include <map>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "multipoly.hpp"
#include "partition.hpp"
#include "rational.hpp"
#include "sympoly.hpp"

namespace selberg {

struct Workspace;

// m_lambda(x_1..x_n) = sum of rows x_n^power * coeff * m_mu(x_1..x_{n-1});
// in the monomial basis every coefficient is 1 (one row per distinct part
// value of lambda padded to n entries).
struct TaylorRow {
  int power = 0;
  Partition mu;
  Rational coeff = 1;
};
std::vector<TaylorRow> taylor_rows(const Partition& lambda, int n);

// m_mu(x_1 + t, ..., x_n + t) = sum of rows coeff * t^{|mu| - |nu|} * m_nu(x).
struct BinomialRow {
  Partition nu;
  Rational coeff = 0;
};
std::vector<BinomialRow> binomial_rows(const Partition& mu, int n);

// The substitution x_i = (1 - t_n) t_i + t_n / n (i < n), x_n = t_n / n,
// including the factor (1/n)(1 - t_n)^{n-1}, mapping integrals over the
// ordered n-simplex to integrals over (ordered (n-1)-simplex) x [0, 1].
MultiPoly substitute_last_variable(const MultiPoly& f);

enum class RecursionVariant {
  corrected,               // the form this library evaluates with
  printed_literal,         // scalar and Beta arguments exactly as printed
  printed_missing_shift,   // arguments fixed, inner elementary factor dropped
};

class RecursionMemo {
 public:
  bool lookup(int n, int kappa, const Partition& lambda, Rational& out) const;
  void store(int n, int kappa, const Partition& lambda, const Rational& value);

 private:
  std::map<std::tuple<int, int, Partition>, Rational> map_;
  mutable std::shared_mutex mutex_;
};

// J(n, kappa, f) for symmetric f given in n variables.
Rational recursion_eval(int n, int kappa, const SymPoly& f, Workspace& ws);
Rational recursion_eval_variant(int n, int kappa, const SymPoly& f, RecursionVariant variant,
                                Workspace& ws);

// I(n, d, p) routed through the recursion.
Rational eval_by_recursion(int n, int d, int p, Workspace& ws);

}  // namespace selberg
