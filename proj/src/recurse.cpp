#include "recurse.hpp"

#include <algorithm>

#include "error.hpp"
#include "workspace.hpp"

namespace selberg {

std::vector<TaylorRow> taylor_rows(const Partition& lambda, int n) {
  check_usage(n >= 1, "taylor_rows requires n >= 1");
  check_usage(lambda.length() <= n, "partition too long for n variables");
  std::vector<int> padded = lambda.padded(n);
  std::vector<TaylorRow> rows;
  for (size_t k = 0; k < padded.size(); ++k) {
    if (k > 0 && padded[k] == padded[k - 1]) continue;  // one row per distinct value
    std::vector<int> rest;
    for (size_t l = 0; l < padded.size(); ++l) {
      if (l != k) rest.push_back(padded[l]);
    }
    TaylorRow row;
    row.power = padded[k];
    row.mu = Partition(rest);
    row.coeff = 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<BinomialRow> binomial_rows(const Partition& mu, int n) {
  check_usage(n >= 1, "binomial_rows requires n >= 1");
  check_usage(mu.length() <= n, "partition too long for n variables");
  std::vector<std::vector<int>> orbit = distinct_permutations(mu.padded(n));
  std::vector<BinomialRow> rows;
  for (int w = mu.weight(); w >= 0; --w) {
    for (const Partition& nu : partitions_of(w, n)) {
      // Coefficient of x^{nu padded, descending} t^{|mu|-|nu|}: sum over the
      // orbit of mu of the componentwise binomials.
      std::vector<int> rep = nu.padded(n);
      Rational c = 0;
      for (const std::vector<int>& a : orbit) {
        Rational product = 1;
        for (int i = 0; i < n && product != 0; ++i) {
          if (rep[static_cast<size_t>(i)] > a[static_cast<size_t>(i)]) {
            product = 0;
          } else {
            product *= Rational(binomial_int(a[static_cast<size_t>(i)],
                                             rep[static_cast<size_t>(i)]));
          }
        }
        c += product;
      }
      if (c != 0) rows.push_back(BinomialRow{nu, c});
    }
  }
  return rows;
}

MultiPoly substitute_last_variable(const MultiPoly& f) {
  int n = f.nvars();
  check_usage(n >= 2, "substitution needs at least two variables");
  MultiPoly u = MultiPoly::variable(n, n - 1);  // the [0,1] coordinate
  MultiPoly one_minus_u = MultiPoly::constant(n, 1) - u;
  MultiPoly center = u.scaled(make_rational(1, n));  // u / n
  std::vector<MultiPoly> images;
  for (int i = 0; i + 1 < n; ++i) {
    images.push_back(one_minus_u * MultiPoly::variable(n, i) + center);
  }
  images.push_back(center);

  MultiPoly result(n);
  for (const auto& [exps, c] : f.terms()) {
    MultiPoly term = MultiPoly::constant(n, c);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < exps[static_cast<size_t>(i)]; ++k) {
        term = term * images[static_cast<size_t>(i)];
      }
    }
    result = result + term;
  }
  // Jacobian of the change of variables.
  MultiPoly jac = MultiPoly::constant(n, make_rational(1, n));
  for (int k = 0; k + 1 < n; ++k) jac = jac * one_minus_u;
  return result * jac;
}

bool RecursionMemo::lookup(int n, int kappa, const Partition& lambda, Rational& out) const {
  std::shared_lock<std::shared_mutex> lock(mutex_);
  auto it = map_.find(std::make_tuple(n, kappa, lambda));
  if (it == map_.end()) return false;
  out = it->second;
  return true;
}

void RecursionMemo::store(int n, int kappa, const Partition& lambda, const Rational& value) {
  std::unique_lock<std::shared_mutex> lock(mutex_);
  map_.emplace(std::make_tuple(n, kappa, lambda), value);
}

namespace {

// Beta(a, b) for positive integer arguments.
Rational beta_int(long a, long b) {
  check_internal(a >= 1 && b >= 1, "nonpositive Beta argument in recursion");
  Rational value(factorial_int(a - 1) * factorial_int(b - 1));
  return value / Rational(factorial_int(a + b - 1));
}

Rational j_monomial(int n, int kappa, const Partition& lambda, RecursionVariant variant,
                    Workspace& ws) {
  check_internal(lambda.length() <= n, "partition too long in recursion");
  if (n == 1) return make_rational(1, lambda.weight() + 1);

  Rational memoized;
  if (variant == RecursionVariant::corrected &&
      ws.recursion_memo.lookup(n, kappa, lambda, memoized)) {
    return memoized;
  }

  long w = lambda.weight();
  long pair_weight = static_cast<long>(kappa) * n * (n - 1) / 2;
  Rational total = 0;
  for (const TaylorRow& row : taylor_rows(lambda, n)) {
    for (const BinomialRow& brow : binomial_rows(row.mu, n - 1)) {
      long wn = brow.nu.weight();
      Rational scalar;
      Rational beta;
      if (variant == RecursionVariant::printed_literal) {
        scalar = rational_pow(Rational(n), wn - n - row.power - 1);
        beta = beta_int(w + wn + 1, n - 1 + pair_weight + wn);
      } else {
        scalar = rational_pow(Rational(n), wn - w - 1);
        beta = beta_int(w - wn + 1, n + pair_weight + wn);
      }
      std::vector<int> child = brow.nu.padded(n - 1);
      if (variant == RecursionVariant::corrected) {
        for (int& part : child) part += kappa;
      }
      total += row.coeff * brow.coeff * scalar * beta *
               j_monomial(n - 1, kappa, Partition(child), variant, ws);
    }
  }
  if (variant == RecursionVariant::corrected) {
    ws.recursion_memo.store(n, kappa, lambda, total);
  }
  return total;
}

}  // namespace

Rational recursion_eval_variant(int n, int kappa, const SymPoly& f, RecursionVariant variant,
                                Workspace& ws) {
  check_usage(n >= 1, "recursion requires n >= 1");
  check_usage(kappa >= 0, "recursion requires kappa >= 0");
  check_usage(f.nvars == n, "symmetric polynomial has the wrong variable count");
  Rational total = 0;
  for (const auto& [lambda, c] : f.terms) {
    total += c * j_monomial(n, kappa, lambda, variant, ws);
  }
  return total;
}

Rational recursion_eval(int n, int kappa, const SymPoly& f, Workspace& ws) {
  return recursion_eval_variant(n, kappa, f, RecursionVariant::corrected, ws);
}

Rational eval_by_recursion(int n, int d, int p, Workspace& ws) {
  check_usage(n >= 1 && d >= 1 && p >= 0, "evaluation requires n >= 1, d >= 1, p >= 0");
  SymPoly f = sym_pow(schur(staircase(n), n), d);
  if (p > 0) f = shift_all_parts(f, p);
  return recursion_eval(n, d, f, ws);
}

}  // namespace selberg
