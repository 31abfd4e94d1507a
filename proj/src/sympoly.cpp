#include "sympoly.hpp"

#include <algorithm>

#include "error.hpp"

namespace selberg {

void SymPoly::add_term(const Partition& lambda, const Rational& c) {
  if (c == 0) return;
  auto it = terms.find(lambda);
  if (it == terms.end()) {
    terms.emplace(lambda, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

std::string SymPoly::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  // Display from dominance-largest down.
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [lambda, c] = *it;
    bool first = out.empty();
    bool negative = c < 0;
    Rational a = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (lambda.empty()) {
      out += rational_to_string(a);
    } else {
      if (a != 1) out += rational_to_string(a) + " ";
      out += "m" + lambda.to_bracket_string();
    }
  }
  return out;
}

SymPoly sym_zero(int nvars, int degree) {
  SymPoly f;
  f.nvars = nvars;
  f.degree = degree;
  return f;
}

SymPoly sym_constant(int nvars, const Rational& c) {
  SymPoly f = sym_zero(nvars, 0);
  f.add_term(Partition(), c);
  return f;
}

SymPoly sym_monomial(const Partition& lambda, int nvars) {
  check_usage(lambda.length() <= nvars,
              "partition " + lambda.to_bracket_string() + " needs more than " +
                  std::to_string(nvars) + " variables");
  SymPoly f = sym_zero(nvars, lambda.weight());
  f.add_term(lambda, Rational(1));
  return f;
}

SymPoly sym_add(const SymPoly& a, const SymPoly& b) {
  check_usage(a.nvars == b.nvars && a.degree == b.degree,
              "adding symmetric polynomials of mixed type");
  SymPoly r = a;
  for (const auto& [lambda, c] : b.terms) r.add_term(lambda, c);
  return r;
}

SymPoly sym_sub(const SymPoly& a, const SymPoly& b) { return sym_add(a, sym_scale(b, Rational(-1))); }

SymPoly sym_scale(const SymPoly& a, const Rational& r) {
  SymPoly out = sym_zero(a.nvars, a.degree);
  if (r == 0) return out;
  for (const auto& [lambda, c] : a.terms) out.terms.emplace(lambda, c * r);
  return out;
}

std::vector<Exponents> distinct_permutations(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  std::vector<Exponents> out;
  do {
    out.push_back(values);
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

MultiPoly sym_to_multipoly(const SymPoly& f) {
  MultiPoly mp(f.nvars);
  for (const auto& [lambda, c] : f.terms) {
    for (const Exponents& e : distinct_permutations(lambda.padded(f.nvars))) {
      mp.add_term(e, c);
    }
  }
  return mp;
}

SymPoly sym_from_multipoly(const MultiPoly& mp, int degree) {
  SymPoly f = sym_zero(mp.nvars(), degree);
  for (const auto& [e, c] : mp.terms()) {
    if (std::is_sorted(e.begin(), e.end(), std::greater<int>())) {
      long total = 0;
      for (int x : e) total += x;
      check_internal(total == degree, "non-homogeneous symmetric expansion");
      f.add_term(Partition(e), c);
    }
  }
  return f;
}

SymPoly sym_multiply(const SymPoly& a, const SymPoly& b) {
  check_usage(a.nvars == b.nvars, "multiplying across variable counts");
  return sym_from_multipoly(sym_to_multipoly(a) * sym_to_multipoly(b), a.degree + b.degree);
}

SymPoly sym_pow(const SymPoly& a, int k) {
  check_usage(k >= 0, "negative power of symmetric polynomial");
  SymPoly r = sym_constant(a.nvars, Rational(1));
  for (int i = 0; i < k; ++i) r = sym_multiply(r, a);
  return r;
}

SymPoly multiply_by_power_sum(const SymPoly& f, int r) {
  check_usage(r >= 1, "power sum index must be at least 1");
  SymPoly out = sym_zero(f.nvars, f.degree + r);
  for (const auto& [mu, c] : f.terms) {
    std::vector<int> padded = mu.padded(f.nvars);
    std::vector<int> seen;
    for (int v : padded) {
      if (std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
      seen.push_back(v);
      std::vector<int> bumped = padded;
      *std::find(bumped.begin(), bumped.end(), v) += r;
      std::sort(bumped.begin(), bumped.end(), std::greater<int>());
      int multiplicity = static_cast<int>(std::count(bumped.begin(), bumped.end(), v + r));
      out.add_term(Partition(bumped), c * multiplicity);
    }
  }
  return out;
}

namespace {

// Enumerates semistandard tableaux of the given shape with entries 1..nvars,
// accumulating one count per content vector that is weakly decreasing.
struct TableauCounter {
  const std::vector<int>& shape;
  int nvars;
  std::vector<std::vector<int>> cells;
  std::vector<int> content;
  SymPoly* out;

  void fill(int row, int col) {
    if (row == static_cast<int>(shape.size())) {
      if (std::is_sorted(content.begin(), content.end(), std::greater<int>())) {
        out->add_term(Partition(content), Rational(1));
      }
      return;
    }
    int next_row = row, next_col = col + 1;
    if (next_col == shape[static_cast<size_t>(row)]) {
      next_row = row + 1;
      next_col = 0;
    }
    int low = 1;
    if (col > 0) low = std::max(low, cells[static_cast<size_t>(row)][static_cast<size_t>(col - 1)]);
    if (row > 0) low = std::max(low, cells[static_cast<size_t>(row - 1)][static_cast<size_t>(col)] + 1);
    for (int v = low; v <= nvars; ++v) {
      cells[static_cast<size_t>(row)][static_cast<size_t>(col)] = v;
      ++content[static_cast<size_t>(v - 1)];
      fill(next_row, next_col);
      --content[static_cast<size_t>(v - 1)];
    }
  }
};

}  // namespace

SymPoly schur(const Partition& lambda, int nvars) {
  check_usage(lambda.length() <= nvars,
              "Schur polynomial of " + lambda.to_bracket_string() + " needs more than " +
                  std::to_string(nvars) + " variables");
  SymPoly out = sym_zero(nvars, lambda.weight());
  if (lambda.empty()) {
    out.add_term(Partition(), Rational(1));
    return out;
  }
  std::vector<int> shape = lambda.parts();
  TableauCounter counter{shape, nvars,
                         std::vector<std::vector<int>>(shape.size()),
                         std::vector<int>(static_cast<size_t>(nvars), 0), &out};
  for (size_t i = 0; i < shape.size(); ++i) {
    counter.cells[i].resize(static_cast<size_t>(shape[i]));
  }
  counter.fill(0, 0);
  return out;
}

SymPoly power_sum(const Partition& lambda, int nvars) {
  SymPoly r = sym_constant(nvars, Rational(1));
  for (int part : lambda.parts()) r = multiply_by_power_sum(r, part);
  return r;
}

SymPoly restrict_vars(const SymPoly& f, int nvars) {
  SymPoly out = sym_zero(nvars, f.degree);
  for (const auto& [lambda, c] : f.terms) {
    if (lambda.length() <= nvars) out.terms.emplace(lambda, c);
  }
  return out;
}

SymPoly shift_all_parts(const SymPoly& f, int k) {
  check_usage(k >= 0, "negative shift of all parts");
  if (k == 0) return f;
  SymPoly out = sym_zero(f.nvars, f.degree + k * f.nvars);
  for (const auto& [lambda, c] : f.terms) {
    std::vector<int> parts = lambda.padded(f.nvars);
    for (int& x : parts) x += k;
    out.terms.emplace(Partition(std::move(parts)), c);
  }
  return out;
}

Rational sym_eval(const SymPoly& f, const std::vector<Rational>& point) {
  check_usage(static_cast<int>(point.size()) == f.nvars, "evaluation point has wrong length");
  Rational total = 0;
  for (const auto& [lambda, c] : f.terms) {
    Rational orbit_sum = 0;
    for (const Exponents& e : distinct_permutations(lambda.padded(f.nvars))) {
      Rational term = 1;
      for (size_t i = 0; i < e.size(); ++i) term *= rational_pow(point[i], e[i]);
      orbit_sum += term;
    }
    total += c * orbit_sum;
  }
  return total;
}

Rational z_lambda_alpha(const Partition& lambda, const Rational& alpha) {
  Rational z = rational_pow(alpha, lambda.length());
  const std::vector<int>& parts = lambda.parts();
  size_t i = 0;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    unsigned long mult = static_cast<unsigned long>(j - i);
    z *= rational_pow(Rational(parts[i]), static_cast<long>(mult));
    z *= Rational(factorial_int(mult));
    i = j;
  }
  return z;
}

std::vector<Rational> PowerBasis::solve(std::vector<Rational> rhs) const {
  size_t n = index.size();
  check_internal(rhs.size() == n, "rhs has wrong length");
  for (size_t k = 0; k < n; ++k) {
    std::swap(rhs[k], rhs[static_cast<size_t>(row_of[k])]);
  }
  // Forward substitution with unit lower triangle.
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < i; ++j) rhs[i] -= lu[i][j] * rhs[j];
  }
  // Back substitution.
  for (size_t i = n; i-- > 0;) {
    for (size_t j = i + 1; j < n; ++j) rhs[i] -= lu[i][j] * rhs[j];
    rhs[i] /= lu[i][i];
  }
  return rhs;
}

const PowerBasis& SymCache::basis(int weight, int nvars) {
  check_usage(weight >= 0 && weight <= nvars,
              "power-sum basis requires degree <= variable count");
  std::lock_guard<std::mutex> lock(mutex_);
  auto key = std::make_pair(weight, nvars);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  PowerBasis pb;
  pb.weight = weight;
  pb.nvars = nvars;
  pb.index = partitions_of(weight, nvars);
  for (size_t i = 0; i < pb.index.size(); ++i) {
    pb.position.emplace(pb.index[i], static_cast<int>(i));
  }
  size_t n = pb.index.size();
  // Column c holds the monomial coordinates of p_{index[c]}.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (size_t c = 0; c < n; ++c) {
    SymPoly p = power_sum(pb.index[c], nvars);
    for (const auto& [lambda, coeff] : p.terms) {
      m[static_cast<size_t>(pb.position.at(lambda))][c] = coeff;
    }
  }
  // In-place LU with row pivoting; the matrix is invertible (power sums are a
  // basis), so a nonzero pivot always exists.
  pb.row_of.resize(n);
  for (size_t k = 0; k < n; ++k) {
    size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    check_internal(pivot < n, "singular power-sum transition matrix");
    std::swap(m[k], m[pivot]);
    pb.row_of[k] = static_cast<int>(pivot);
    for (size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      m[i][k] /= m[k][k];
      for (size_t j = k + 1; j < n; ++j) m[i][j] -= m[i][k] * m[k][j];
    }
  }
  pb.lu = std::move(m);
  return cache_.emplace(key, std::move(pb)).first->second;
}

std::vector<Rational> SymCache::power_coordinates(const SymPoly& f) {
  const PowerBasis& pb = basis(f.degree, f.nvars);
  std::vector<Rational> rhs(pb.index.size(), Rational(0));
  for (const auto& [lambda, c] : f.terms) {
    rhs[static_cast<size_t>(pb.position.at(lambda))] = c;
  }
  return pb.solve(std::move(rhs));
}

Rational alpha_inner_product(const SymPoly& f, const SymPoly& g, const Rational& alpha,
                             SymCache& cache) {
  check_usage(f.nvars == g.nvars, "inner product across variable counts");
  check_usage(f.degree == g.degree, "inner product across degrees");
  check_usage(f.degree <= f.nvars,
              "inner product requires degree <= variable count; got degree " +
                  std::to_string(f.degree) + " in " + std::to_string(f.nvars) + " variables");
  std::vector<Rational> yf = cache.power_coordinates(f);
  std::vector<Rational> yg = cache.power_coordinates(g);
  const PowerBasis& pb = cache.basis(f.degree, f.nvars);
  Rational total = 0;
  for (size_t i = 0; i < pb.index.size(); ++i) {
    if (yf[i] == 0 || yg[i] == 0) continue;
    total += yf[i] * yg[i] * z_lambda_alpha(pb.index[i], alpha);
  }
  return total;
}

}  // namespace selberg
