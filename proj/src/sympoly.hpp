// Symmetric polynomials in a fixed number of variables, homogeneous of a
// fixed degree, stored in the monomial basis: partition -> coefficient with
// no zero entries and every partition length <= nvars.  The zero polynomial
// has an empty term map but keeps its degree.
#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "multipoly.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace selberg {

struct SymPoly {
  int nvars = 1;
  int degree = 0;
  std::map<Partition, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  Rational coefficient(const Partition& lambda) const {
    auto it = terms.find(lambda);
    return it == terms.end() ? Rational(0) : it->second;
  }
  void add_term(const Partition& lambda, const Rational& c);
  bool operator==(const SymPoly& o) const {
    return nvars == o.nvars && degree == o.degree && terms == o.terms;
  }
  std::string to_string() const;  // "m[2] + 2/3 m[1,1]"
};

SymPoly sym_zero(int nvars, int degree);
SymPoly sym_constant(int nvars, const Rational& c);  // degree 0

// m_lambda in nvars variables; pre: length(lambda) <= nvars.
SymPoly sym_monomial(const Partition& lambda, int nvars);

// Same nvars; same degree required for + and -.
SymPoly sym_add(const SymPoly& a, const SymPoly& b);
SymPoly sym_sub(const SymPoly& a, const SymPoly& b);
SymPoly sym_scale(const SymPoly& a, const Rational& r);
SymPoly sym_multiply(const SymPoly& a, const SymPoly& b);
SymPoly sym_pow(const SymPoly& a, int k);

// f * p_r in the monomial basis, without expanding orbits.
SymPoly multiply_by_power_sum(const SymPoly& f, int r);

// Schur polynomial via semistandard tableaux; pre: length(lambda) <= nvars.
SymPoly schur(const Partition& lambda, int nvars);

// p_lambda = prod_i p_{lambda_i}; pre: length constraints as for multiply.
SymPoly power_sum(const Partition& lambda, int nvars);

// Drop terms whose partitions need more than nvars variables.
SymPoly restrict_vars(const SymPoly& f, int nvars);

// f * (x_1 ... x_nvars)^k: adds k to every part of every term.
SymPoly shift_all_parts(const SymPoly& f, int k);

// Full orbit expansion.
MultiPoly sym_to_multipoly(const SymPoly& f);
// Reads coefficients at weakly decreasing exponent vectors; pre: mp symmetric.
SymPoly sym_from_multipoly(const MultiPoly& mp, int degree);

Rational sym_eval(const SymPoly& f, const std::vector<Rational>& point);

// All distinct permutations of the given multiset of exponents.
std::vector<Exponents> distinct_permutations(std::vector<int> values);

// z_lambda(alpha) = alpha^length(lambda) * prod_r r^{m_r} m_r!  where m_r is
// the multiplicity of r in lambda.
Rational z_lambda_alpha(const Partition& lambda, const Rational& alpha);

// Exact linear algebra for the power-sum basis of the homogeneous symmetric
// polynomials of one weight: solves for power-sum coordinates from monomial
// coordinates.  Instances are built once per (weight, nvars) and cached.
struct PowerBasis {
  int weight = 0;
  int nvars = 0;
  std::vector<Partition> index;           // partitions of weight, descending lex
  std::map<Partition, int> position;
  // LU factorization (Doolittle, partial pivoting) of the matrix whose column
  // c lists the monomial coordinates of p_{index[c]}.
  std::vector<std::vector<Rational>> lu;
  std::vector<int> row_of;                // permutation applied to rows

  // Solve M y = rhs where M is the matrix described above.
  std::vector<Rational> solve(std::vector<Rational> rhs) const;
};

class SymCache {
 public:
  // Pre: 0 <= weight <= nvars (the monomial basis is only square there).
  const PowerBasis& basis(int weight, int nvars);
  // Power-sum coordinates of f (pre: f.degree <= f.nvars).
  std::vector<Rational> power_coordinates(const SymPoly& f);

 private:
  std::map<std::pair<int, int>, PowerBasis> cache_;
  std::mutex mutex_;
};

// <f, g> under <p_lambda, p_mu> = delta * z_lambda(alpha).  Usage error when
// degrees or variable counts differ or degree > nvars.
Rational alpha_inner_product(const SymPoly& f, const SymPoly& g, const Rational& alpha,
                             SymCache& cache);

}  // namespace selberg
