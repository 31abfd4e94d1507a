// Symmetric polynomials in the monomial basis and the alpha inner product.
#include "doctest.h"

#include <vector>

#include "error.hpp"
#include "multipoly.hpp"
#include "partition.hpp"
#include "rational.hpp"
#include "sympoly.hpp"

using namespace selberg;

namespace {
MultiPoly pairwise_sum_product(int n) {  // prod_{i<j} (x_i + x_j)
  MultiPoly acc = MultiPoly::constant(n, Rational(1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      acc = acc * (MultiPoly::variable(n, i) + MultiPoly::variable(n, j));
    }
  }
  return acc;
}
}  // namespace

TEST_CASE("monomial basis round-trips through full expansion") {
  SymPoly m21 = sym_monomial(Partition({2, 1}), 3);
  MultiPoly full = sym_to_multipoly(m21);
  CHECK(full.term_count() == 6);
  CHECK(sym_from_multipoly(full, 3) == m21);
  CHECK(sym_eval(m21, {Rational(1), Rational(2), Rational(3)}) ==
        full.eval({Rational(1), Rational(2), Rational(3)}));
}

TEST_CASE("products expand correctly") {
  SymPoly m1 = sym_monomial(Partition({1}), 2);
  SymPoly sq = sym_pow(m1, 2);
  CHECK(sq.coefficient(Partition({2})) == 1);
  CHECK(sq.coefficient(Partition({1, 1})) == 2);
  CHECK(sq.degree == 2);

  SymPoly cube = sym_pow(m1, 3);  // (x+y)^3 = m_3 + 3 m_{2,1}
  CHECK(cube.coefficient(Partition({3})) == 1);
  CHECK(cube.coefficient(Partition({2, 1})) == 3);

  // Multiplication agrees with full expansion.
  SymPoly a = sym_monomial(Partition({2}), 3);
  SymPoly b = sym_monomial(Partition({1, 1}), 3);
  CHECK(sym_to_multipoly(sym_multiply(a, b)) ==
        sym_to_multipoly(a) * sym_to_multipoly(b));
}

TEST_CASE("power sums and the conversion basis") {
  CHECK(power_sum(Partition({2}), 2) == sym_monomial(Partition({2}), 2));
  SymPoly p11 = power_sum(Partition({1, 1}), 2);
  CHECK(p11.coefficient(Partition({2})) == 1);
  CHECK(p11.coefficient(Partition({1, 1})) == 2);

  SymPoly f = sym_monomial(Partition({2, 1}), 3);
  CHECK(multiply_by_power_sum(f, 2) == sym_multiply(f, power_sum(Partition({2}), 3)));

  // Reconstruct f from its power-sum coordinates.
  SymCache cache;
  std::vector<Rational> coords = cache.power_coordinates(f);
  const PowerBasis& basis = cache.basis(3, 3);
  REQUIRE(coords.size() == basis.index.size());
  SymPoly rebuilt = sym_zero(3, 3);
  for (size_t i = 0; i < coords.size(); ++i) {
    rebuilt = sym_add(rebuilt, sym_scale(power_sum(basis.index[i], 3), coords[i]));
  }
  CHECK(rebuilt == f);
}

TEST_CASE("schur polynomials via tableaux") {
  CHECK(schur(Partition({1}), 2) == sym_monomial(Partition({1}), 2));
  CHECK(schur(Partition({1, 1}), 3) == sym_monomial(Partition({1, 1}), 3));
  SymPoly s21 = schur(Partition({2, 1}), 3);
  CHECK(s21.coefficient(Partition({2, 1})) == 1);
  CHECK(s21.coefficient(Partition({1, 1, 1})) == 2);
  CHECK(s21.terms.size() == 2);
  // In two variables the bottom term disappears.
  CHECK(schur(Partition({2, 1}), 2) == sym_monomial(Partition({2, 1}), 2));
}

TEST_CASE("staircase schur equals the pairwise sum product") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(sym_to_multipoly(schur(staircase(n), n)) == pairwise_sum_product(n));
  }
}

TEST_CASE("variable restriction and part shifts") {
  SymPoly m111 = sym_monomial(Partition({1, 1, 1}), 3);
  SymPoly cut = restrict_vars(m111, 2);
  CHECK(cut.is_zero());
  CHECK(cut.nvars == 2);
  CHECK(cut.degree == 3);

  SymPoly m21 = sym_monomial(Partition({2, 1}), 2);
  CHECK(shift_all_parts(m21, 1) == sym_monomial(Partition({3, 2}), 2));
  SymPoly c = sym_constant(2, Rational(5));
  CHECK(shift_all_parts(c, 2) == sym_scale(sym_monomial(Partition({2, 2}), 2), Rational(5)));
}

TEST_CASE("distinct permutations enumerate multiset orbits") {
  CHECK(distinct_permutations({1, 1, 0}).size() == 3);
  CHECK(distinct_permutations({2, 1, 0}).size() == 6);
  CHECK(distinct_permutations({0, 0}).size() == 1);
}

TEST_CASE("z_lambda and the alpha inner product") {
  Rational alpha = make_rational(2, 3);
  CHECK(z_lambda_alpha(Partition({2, 2, 1}), alpha) ==
        Rational(8) * alpha * alpha * alpha);
  CHECK(z_lambda_alpha(Partition(), alpha) == 1);

  SymCache cache;
  SymPoly p1 = power_sum(Partition({1}), 1);
  CHECK(alpha_inner_product(p1, p1, alpha, cache) == alpha);
  SymPoly p2 = power_sum(Partition({2}), 2);
  CHECK(alpha_inner_product(p2, p2, alpha, cache) == Rational(2) * alpha);
  SymPoly p11 = power_sum(Partition({1, 1}), 2);
  CHECK(alpha_inner_product(p2, p11, alpha, cache) == 0);
  CHECK(alpha_inner_product(p11, p11, alpha, cache) == Rational(2) * alpha * alpha);

  SymPoly wrongdeg = sym_monomial(Partition({1}), 2);
  CHECK_THROWS_AS(alpha_inner_product(p2, wrongdeg, alpha, cache), Error);
}

TEST_CASE("rendering") {
  SymPoly f = sym_add(sym_monomial(Partition({2}), 2),
                      sym_scale(sym_monomial(Partition({1, 1}), 2), make_rational(2, 3)));
  CHECK(f.to_string() == "m[2] + 2/3 m[1,1]");
  CHECK(sym_zero(2, 1).to_string() == "0");
}
