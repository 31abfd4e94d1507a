#include "oracle.hpp"

#include <algorithm>

#include "error.hpp"

namespace selberg {

Rational OracleMemo::beta1(int c, int b) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto key = std::make_pair(c, b);
  auto it = beta_.find(key);
  if (it != beta_.end()) return it->second;
  Rational v(factorial_int(static_cast<unsigned long>(c)) *
                 factorial_int(static_cast<unsigned long>(b)),
             factorial_int(static_cast<unsigned long>(c + b + 1)));
  v.canonicalize();
  beta_.emplace(key, v);
  return v;
}

bool OracleMemo::lookup(const Exponents& e, Rational& out) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = simplex_.find(e);
  if (it == simplex_.end()) return false;
  out = it->second;
  return true;
}

void OracleMemo::store(const Exponents& e, const Rational& value) {
  std::lock_guard<std::mutex> lock(mutex_);
  simplex_.emplace(e, value);
}

namespace {

// Walks every way of splitting each exponent a_i across the slots j >= i,
// accumulating the multinomial weight and the per-slot totals c_j; at a leaf
// the term contributes prod_j beta1(c_j, j + prefix_{<j}(c)).
struct SimplexIntegrator {
  const Exponents& a;
  int n;
  OracleMemo& memo;
  std::vector<int> c;
  Rational total = 0;

  void over_variable(int i, const Rational& coeff) {
    if (i == n) {
      Rational term = coeff;
      long prefix = 0;
      for (int j = 0; j < n; ++j) {
        term *= memo.beta1(c[static_cast<size_t>(j)], j + static_cast<int>(prefix));
        prefix += c[static_cast<size_t>(j)];
      }
      total += term;
      return;
    }
    distribute(i, i, a[static_cast<size_t>(i)], coeff);
  }

  void distribute(int i, int j, int remaining, const Rational& coeff) {
    if (j == n - 1) {
      c[static_cast<size_t>(j)] += remaining;
      Rational next = coeff * rational_pow(make_rational(1, j + 1), remaining);
      over_variable(i + 1, next);
      c[static_cast<size_t>(j)] -= remaining;
      return;
    }
    for (int m = 0; m <= remaining; ++m) {
      Rational next = coeff * Rational(binomial_int(static_cast<unsigned long>(remaining),
                                                    static_cast<unsigned long>(m))) *
                      rational_pow(make_rational(1, j + 1), m);
      c[static_cast<size_t>(j)] += m;
      distribute(i, j + 1, remaining - m, next);
      c[static_cast<size_t>(j)] -= m;
    }
  }
};

}  // namespace

Rational integrate_monomial_simplex(const Exponents& a, OracleMemo* memo) {
  check_usage(!a.empty(), "integration needs at least one variable");
  for (int x : a) check_usage(x >= 0, "negative exponent in monomial integral");
  OracleMemo local;
  OracleMemo& m = memo ? *memo : local;
  Rational cached;
  if (m.lookup(a, cached)) return cached;

  int n = static_cast<int>(a.size());
  SimplexIntegrator integrator{a, n, m, std::vector<int>(a.size(), 0)};
  integrator.over_variable(0, Rational(1));
  Rational value = integrator.total / Rational(factorial_int(static_cast<unsigned long>(n)));
  value.canonicalize();
  m.store(a, value);
  return value;
}

Rational integrate_poly_simplex(const MultiPoly& f, OracleMemo* memo) {
  OracleMemo local;
  OracleMemo& m = memo ? *memo : local;
  m.last_term_count = f.term_count();
  Rational total = 0;
  for (const auto& [e, c] : f.terms()) {
    total += c * integrate_monomial_simplex(e, &m);
  }
  return total;
}

Rational integrate_symmetric_orthant(const MultiPoly& f) {
  int n = f.nvars();
  check_usage(n >= 1, "integration needs at least one variable");
  // Symmetry check: within each orbit of exponent vectors the coefficients
  // must agree and the whole orbit must be present.
  std::map<Exponents, std::pair<Rational, size_t>> orbits;  // sorted -> (coeff, count)
  for (const auto& [e, c] : f.terms()) {
    Exponents sorted = e;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    auto it = orbits.find(sorted);
    if (it == orbits.end()) {
      orbits.emplace(sorted, std::make_pair(c, size_t{1}));
    } else {
      check_usage(it->second.first == c, "integrand is not symmetric in its variables");
      it->second.second += 1;
    }
  }
  for (const auto& [sorted, info] : orbits) {
    Integer orbit_size = factorial_int(static_cast<unsigned long>(n));
    size_t i = 0;
    while (i < sorted.size()) {
      size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      orbit_size /= factorial_int(static_cast<unsigned long>(j - i));
      i = j;
    }
    check_usage(Integer(static_cast<unsigned long>(info.second)) == orbit_size,
                "integrand is not symmetric in its variables");
  }
  // Dirichlet: integral of x^a over the unordered corner domain is
  // prod a_i! / (n + sum a_i)!.
  Rational total = 0;
  for (const auto& [e, c] : f.terms()) {
    long degree = 0;
    Integer numerator = 1;
    for (int x : e) {
      degree += x;
      numerator *= factorial_int(static_cast<unsigned long>(x));
    }
    Rational term(numerator, factorial_int(static_cast<unsigned long>(n + degree)));
    term.canonicalize();
    total += c * term;
  }
  return total;
}

namespace {

MultiPoly shift_all_exponents(const MultiPoly& f, int p) {
  if (p == 0) return f;
  MultiPoly out(f.nvars());
  Exponents e;
  for (const auto& [exps, c] : f.terms()) {
    e = exps;
    for (int& x : e) x += p;
    out.add_term(e, c);
  }
  return out;
}

void enforce_guard(const OracleGuard& guard, int n, int d, int p) {
  if (n > guard.max_n || d > guard.max_d || p > guard.max_p) {
    fail_resource("oracle guard exceeded: requested (n=" + std::to_string(n) +
                  ", d=" + std::to_string(d) + ", p=" + std::to_string(p) +
                  ") with limits (n<=" + std::to_string(guard.max_n) +
                  ", d<=" + std::to_string(guard.max_d) +
                  ", p<=" + std::to_string(guard.max_p) +
                  "); raise the guard explicitly to go further");
  }
}

}  // namespace

Rational oracle_I(int n, int d, int p, const OracleGuard& guard, OracleMemo* memo) {
  check_usage(n >= 1 && d >= 1 && p >= 0, "oracle_I requires n >= 1, d >= 1, p >= 0");
  enforce_guard(guard, n, d, p);
  MultiPoly f = shift_all_exponents(squared_difference_product(n, d), p);
  Rational ordered = integrate_poly_simplex(f, memo);
  if (d % 2 == 0) {
    Rational unordered = integrate_symmetric_orthant(f);
    Rational divided = unordered / Rational(factorial_int(static_cast<unsigned long>(n)));
    check_internal(divided == ordered,
                   "ordered-simplex and symmetric-orthant oracle routes disagree");
  }
  return ordered;
}

Rational oracle_J(int n, int kappa, const SymPoly& f, const OracleGuard& guard,
                  OracleMemo* memo) {
  check_usage(n >= 1 && kappa >= 0, "oracle_J requires n >= 1, kappa >= 0");
  check_usage(f.nvars == n, "oracle_J integrand has wrong variable count");
  enforce_guard(guard, n, kappa, 0);
  MultiPoly g = sym_to_multipoly(f) * vandermonde_product(n).pow(kappa);
  Rational ordered = integrate_poly_simplex(g, memo);
  if (kappa % 2 == 0) {
    Rational unordered = integrate_symmetric_orthant(g);
    Rational divided = unordered / Rational(factorial_int(static_cast<unsigned long>(n)));
    check_internal(divided == ordered,
                   "ordered-simplex and symmetric-orthant oracle routes disagree");
  }
  return ordered;
}

}  // namespace selberg
