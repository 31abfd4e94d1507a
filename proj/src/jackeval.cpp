#include "jackeval.hpp"

#include <algorithm>

#include "error.hpp"
#include "workspace.hpp"

namespace selberg {

const JackExpansion* ExpansionCache::lookup(int n, int d) const {
  std::shared_lock<std::shared_mutex> lock(mutex_);
  auto it = map_.find({n, d});
  return it == map_.end() ? nullptr : &it->second;
}

const JackExpansion& ExpansionCache::store(int n, int d, JackExpansion expansion) {
  std::unique_lock<std::shared_mutex> lock(mutex_);
  return map_.emplace(std::make_pair(n, d), std::move(expansion)).first->second;
}

std::vector<int> minimal_parts(int n, int d) {
  check_usage(n >= 1 && d >= 1, "minimal_parts requires n >= 1, d >= 1");
  std::vector<int> mins(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    mins[static_cast<size_t>(i - 1)] = (d * (n - i) + 1) / 2;
  }
  return mins;
}

const JackExpansion& expand_sdelta_power(int n, int d, Workspace& ws) {
  check_usage(n >= 1 && d >= 1, "expansion requires n >= 1, d >= 1");
  if (const JackExpansion* hit = ws.expansions.lookup(n, d)) return *hit;

  JackExpansion ex;
  ex.n = n;
  ex.d = d;
  ex.alpha = make_rational(2, d);

  SymPoly residual = sym_pow(schur(staircase(n), n), d);
  std::vector<int> part_minima = minimal_parts(n, d);
  std::vector<int> target_parts;
  for (int i = 0; i < n - 1; ++i) target_parts.push_back(d * (n - 1 - i));
  Partition target(target_parts);  // d * staircase

  while (!residual.terms.empty()) {
    auto top = std::prev(residual.terms.end());  // dominance-largest survivor
    Partition lambda = top->first;
    Rational c = top->second;
    check_internal(dominance_leq(lambda, target),
                   "expansion support escapes the dominance cone of " +
                       target.to_bracket_string());
    for (int i = 0; i < n; ++i) {
      check_internal(lambda.part(i) >= part_minima[static_cast<size_t>(i)],
                     "expansion part fell below its minimum at " +
                         lambda.to_bracket_string());
    }
    if (!ex.terms.empty()) {
      check_internal(lambda < ex.terms.back().first,
                     "expansion elimination failed to descend");
    }
    ex.terms.emplace_back(lambda, c);
    SymPoly basis = jack_restricted(lambda, ex.alpha, n, ws.jacktable, ws.symcache);
    residual = sym_sub(residual, sym_scale(basis, c));
    check_internal(residual.coefficient(lambda) == 0,
                   "elimination left a residual at its own leading term");
  }
  check_internal(!ex.terms.empty(), "empty expansion");
  return ws.expansions.store(n, d, std::move(ex));
}

GammaValue v_lambda_general(const Partition& lambda, int n, long scale_twice) {
  GammaValue v = GammaValue::one();
  std::vector<int> parts = lambda.padded(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      long diff = 2L * (parts[static_cast<size_t>(i)] - parts[static_cast<size_t>(j)]);
      v *= gamma_half(HalfInt::from_twice(diff + scale_twice * (j - i + 1)));
      v /= gamma_half(HalfInt::from_twice(diff + scale_twice * (j - i)));
    }
  }
  return v;
}

GammaValue v_lambda(const Partition& lambda, int n, int d) {
  check_usage(n >= 1 && d >= 1, "v_lambda requires n >= 1, d >= 1");
  check_usage(lambda.length() <= n, "partition too long for n variables");
  return v_lambda_general(lambda, n, d);
}

ClosedForm jack_basis_closed_form(const Partition& lambda, int n, int d) {
  check_usage(n >= 1 && d >= 1, "basis integral requires n >= 1, d >= 1");
  check_usage(lambda.length() <= n, "partition too long for n variables");
  GammaValue v = v_lambda(lambda, n, d);
  ClosedForm cf;
  cf.coefficient = v.coefficient;
  cf.sqrt_pi_power = v.sqrt_pi_power;
  for (int i = 1; i <= n; ++i) {
    cf.numerator_gamma_shifts.push_back(
        HalfInt::from_twice(2L * lambda.part(i - 1) + 2 + static_cast<long>(d) * (n - i)));
  }
  cf.denominator_stretch = n;
  cf.denominator_offset =
      lambda.weight() + n + static_cast<long>(d) * n * (n - 1) / 2 + 1;
  cf.phi = UniPoly::one();
  return cf;
}

Rational jack_basis_integral(const Partition& lambda, int n, int d, int p) {
  check_usage(p >= 0, "basis integral requires p >= 0");
  return closedform_eval(jack_basis_closed_form(lambda, n, d), p);
}

Rational eval_by_jack_expansion(int n, int d, int p, Workspace& ws) {
  check_usage(p >= 0, "evaluation requires p >= 0");
  const JackExpansion& ex = expand_sdelta_power(n, d, ws);
  Rational total = 0;
  for (const auto& [lambda, c] : ex.terms) {
    total += c * jack_basis_integral(lambda, n, d, p);
  }
  return total;
}

long phi_degree_bound(int n, int d) {
  check_usage(n >= 1 && d >= 1, "degree bound requires n >= 1, d >= 1");
  long twice_weight = static_cast<long>(d) * n * (n - 1) / 2;  // = total weight
  long numerator = d % 2 == 0 ? twice_weight : twice_weight - n / 2;
  check_internal(numerator % 2 == 0, "degree bound is not an integer");
  return numerator / 2;
}

ClosedForm closed_form_by_jack(int n, int d, Workspace& ws) {
  long bound = phi_degree_bound(n, d);
  ClosedForm cf;
  cf.coefficient = 1;
  std::vector<int> part_minima = minimal_parts(n, d);
  long half_count = 0;
  for (int i = 1; i <= n; ++i) {
    long twice = 2L * (1 + part_minima[static_cast<size_t>(i - 1)]) +
                 static_cast<long>(d) * (n - i);
    HalfInt s = HalfInt::from_twice(twice);
    if (!s.is_integer()) ++half_count;
    cf.numerator_gamma_shifts.push_back(s);
  }
  cf.sqrt_pi_power = -half_count;
  cf.denominator_stretch = n;
  cf.denominator_offset = static_cast<long>(n) + static_cast<long>(d) * n * (n - 1) + 1;

  // phi(p) = I(p) * Gamma(np + offset) / (sqrt(pi)^spp * prod Gamma(p + s_i))
  // at each node; the quotient is rational node by node.
  auto phi_value = [&](long p) {
    GammaValue g(Rational(1), cf.sqrt_pi_power);
    for (const HalfInt& s : cf.numerator_gamma_shifts) g *= gamma_half(s + p);
    GammaValue denom = gamma_half(HalfInt(cf.denominator_stretch * p + cf.denominator_offset));
    Rational value = eval_by_jack_expansion(n, d, static_cast<int>(p), ws);
    return (GammaValue(value, 0) * denom / g).rational_value();
  };

  std::vector<Rational> nodes, values;
  for (long p = 0; p <= bound; ++p) {
    nodes.emplace_back(p);
    values.push_back(phi_value(p));
  }
  cf.phi = interpolate(nodes, values);

  // The interpolation had exactly bound+1 nodes; two fresh nodes confirm the
  // closed form really is polynomial of degree <= bound.
  for (long p = bound + 1; p <= bound + 2; ++p) {
    check_internal(closedform_eval(cf, p) == eval_by_jack_expansion(n, d, static_cast<int>(p), ws),
                   "residual polynomial exceeds its degree bound");
  }
  return cf;
}

Rational jack_basis_integral_printed_shift(const Partition& lambda, int n, int d, int p) {
  GammaValue acc = v_lambda(lambda, n, d);
  for (int i = 1; i <= n; ++i) {
    acc *= gamma_half(HalfInt::from_twice(2L * (lambda.part(i - 1) + p + 1) +
                                          static_cast<long>(d) * (n - i + 1)));
  }
  long a = lambda.weight() + static_cast<long>(n) * p + n +
           static_cast<long>(d) * n * (n - 1) / 2;
  acc /= gamma_half(HalfInt(a + 1));
  return acc.rational_value();
}

Rational eval_printed_prefactor(int n, int d, int p, Workspace& ws) {
  const JackExpansion& ex = expand_sdelta_power(n, d, ws);
  Rational total = 0;
  for (const auto& [lambda, c] : ex.terms) {
    GammaValue acc = v_lambda(lambda, n, d);
    for (int i = 1; i <= n; ++i) {
      acc *= gamma_half(HalfInt::from_twice(2L * (lambda.part(i - 1) + p + 1) +
                                            static_cast<long>(d) * (n - i)));
    }
    long a_printed = static_cast<long>(n) * (p + static_cast<long>(d) * (n - 1));
    acc /= gamma_half(HalfInt(a_printed + 1));
    total += c * acc.rational_value();
  }
  return total;
}

GammaValue eval_printed_half_scale(int n, int d, int p, Workspace& ws) {
  check_usage(d % 2 == 0, "half-scale variant needs even d");
  const JackExpansion& ex = expand_sdelta_power(n, d, ws);
  GammaValue total;
  for (const auto& [lambda, c] : ex.terms) {
    // Norm ratio taken at half the correct scale; everything else as in
    // jack_basis_integral.
    GammaValue acc = v_lambda_general(lambda, n, d / 2);
    for (int i = 1; i <= n; ++i) {
      acc *= gamma_half(HalfInt::from_twice(2L * (lambda.part(i - 1) + p + 1) +
                                            static_cast<long>(d) * (n - i)));
    }
    long a = static_cast<long>(n) * p + lambda.weight() + n +
             static_cast<long>(d) * n * (n - 1) / 2;
    acc /= gamma_half(HalfInt(a + 1));
    total = total + acc.scaled(c);
  }
  return total;
}

ClosedForm closed_form_loose_shifts(int n, int d, Workspace& ws) {
  check_usage(d % 2 == 0, "loose-shift extraction implemented for even d");
  ClosedForm cf;
  cf.coefficient = 1;
  cf.sqrt_pi_power = 0;
  for (int i = 1; i <= n; ++i) {
    cf.numerator_gamma_shifts.push_back(HalfInt(1 + d * (n - i) / 2));
  }
  cf.denominator_stretch = n;
  cf.denominator_offset = static_cast<long>(n) + static_cast<long>(d) * n * (n - 1) + 1;
  long loose_degree = phi_degree_bound(n, d) + static_cast<long>(d) * n * (n - 1) / 4;
  auto phi_value = [&](long p) {
    GammaValue g = GammaValue::one();
    for (const HalfInt& s : cf.numerator_gamma_shifts) g *= gamma_half(s + p);
    GammaValue denom = gamma_half(HalfInt(cf.denominator_stretch * p + cf.denominator_offset));
    Rational value = eval_by_jack_expansion(n, d, static_cast<int>(p), ws);
    return (GammaValue(value, 0) * denom / g).rational_value();
  };
  std::vector<Rational> nodes, values;
  for (long p = 0; p <= loose_degree; ++p) {
    nodes.emplace_back(p);
    values.push_back(phi_value(p));
  }
  cf.phi = interpolate(nodes, values);
  for (long p = loose_degree + 1; p <= loose_degree + 2; ++p) {
    check_internal(closedform_eval(cf, p) == eval_by_jack_expansion(n, d, static_cast<int>(p), ws),
                   "loose residual polynomial exceeds its degree bound");
  }
  return cf;
}

}  // namespace selberg
