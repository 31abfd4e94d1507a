#include "multipoly.hpp"

#include <algorithm>

#include "error.hpp"

namespace selberg {

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(static_cast<size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::monomial(Exponents e, const Rational& c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  check_internal(index >= 0 && index < nvars, "variable index out of range");
  Exponents e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(index)] = 1;
  return monomial(std::move(e), Rational(1));
}

long MultiPoly::total_degree() const {
  long deg = -1;
  for (const auto& [e, c] : terms_) {
    long d = 0;
    for (int x : e) d += x;
    deg = std::max(deg, d);
  }
  return deg;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  check_internal(static_cast<int>(e.size()) == nvars_, "exponent vector has wrong length");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_internal(nvars_ == o.nvars_, "mixed variable counts");
  MultiPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_internal(nvars_ == o.nvars_, "mixed variable counts");
  MultiPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_internal(nvars_ == o.nvars_, "mixed variable counts");
  MultiPoly r(nvars_);
  Exponents e(static_cast<size_t>(nvars_), 0);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& r) const {
  MultiPoly out(nvars_);
  if (r == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * r);
  return out;
}

MultiPoly MultiPoly::pow(int k) const {
  check_usage(k >= 0, "negative polynomial power");
  MultiPoly r = constant(nvars_, Rational(1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  check_usage(static_cast<int>(point.size()) == nvars_, "evaluation point has wrong length");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (size_t i = 0; i < e.size(); ++i) {
      term *= rational_pow(point[i], e[i]);
    }
    total += term;
  }
  return total;
}

MultiPoly vandermonde_product(int n) {
  MultiPoly r = MultiPoly::constant(n, Rational(1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      r = r * (MultiPoly::variable(n, i) - MultiPoly::variable(n, j));
    }
  }
  return r;
}

MultiPoly squared_difference_product(int n, int d) {
  MultiPoly r = MultiPoly::constant(n, Rational(1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      MultiPoly xi2 = MultiPoly::variable(n, i) * MultiPoly::variable(n, i);
      MultiPoly xj2 = MultiPoly::variable(n, j) * MultiPoly::variable(n, j);
      r = r * (xi2 - xj2).pow(d);
    }
  }
  return r;
}

}  // namespace selberg
