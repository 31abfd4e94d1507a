#include "errata.hpp"

#include "closedform.hpp"
#include "error.hpp"
#include "jackeval.hpp"
#include "oracle.hpp"
#include "permsum.hpp"
#include "recurse.hpp"
#include "sympoly.hpp"
#include "unipoly.hpp"
#include "workspace.hpp"

namespace selberg {

GammaValue display_two_var(long p) {
  GammaValue value(Rational(2), -1);
  value *= gamma_half(HalfInt(p));
  value *= gamma_half(HalfInt::from_twice(2 * p + 3));
  value /= gamma_half(HalfInt(2 * p + 3));
  return value;
}

GammaValue display_three_var_printed(long p) {
  GammaValue value(make_rational(1, 2), -1);
  value = value.scaled(Rational(8 * p + 15));
  value *= gamma_half(HalfInt(p));
  value *= gamma_half(HalfInt::from_twice(2 * p + 3));
  value *= gamma_half(HalfInt(p + 2));
  value /= gamma_half(HalfInt(2 * p + 3));  // the divisor the display should not have
  value /= gamma_half(HalfInt(3 * p + 7));
  return value;
}

namespace {

std::string frac(const Rational& r) { return rational_to_fraction_string(r); }

// det(y_j^{2(i-1)}) by Leibniz expansion, i, j = 1..n.
Rational even_power_determinant(const std::vector<Rational>& y) {
  int n = static_cast<int>(y.size());
  Rational det = 0;
  for (const std::vector<int>& perm : all_permutations(n)) {
    Rational term(permutation_sign(perm));
    for (int i = 0; i < n; ++i) {
      term *= rational_pow(y[static_cast<size_t>(perm[static_cast<size_t>(i)] - 1)],
                           2L * i);
    }
    det += term;
  }
  return det;
}

}  // namespace

std::vector<ErrataEntry> errata_entries(Workspace& ws) {
  std::vector<ErrataEntry> entries;

  Rational oracle_220 = oracle_I(2, 2, 0, ws.guard, &ws.oracle_memo);

  {
    ErrataEntry e;
    e.id = "perm-normalization";
    e.location = "normalization constant of the permutation-sum evaluation "
                 "(stated in two places)";
    e.printed_form = "a = n(p+1) + d n(n-1)/2";
    e.implemented_form = "a = n(p + d(n-1) + 1)";
    e.arbitration = "I(2,2,0)";
    e.printed_value = frac(eval_perm_printed_normalization(2, 2, 0));
    e.implemented_value = frac(eval_by_permutation_sum(2, 2, 0, ws.threads));
    e.oracle_value = frac(oracle_220);
    entries.push_back(std::move(e));
  }

  {
    ErrataEntry e;
    e.id = "pochhammer-base-index";
    e.location = "rising-factorial base in the arrangement-sum polynomial factor "
                 "(both displays)";
    e.printed_form = "(p + 1 + d(i+1)) rising to 2 mu_i";
    e.implemented_form = "(p + 1 + d(i-1)) rising to 2 mu_i";
    e.arbitration = "polynomial factor for n=2, d=2 at p=0";
    UniPoly printed = phi_printed_index(2, 2);
    UniPoly implemented = phi_by_arrangement_sum(2, 2, ws.threads);
    // Direct-integration reading of the factor at p=0: peel the gamma
    // prefactors of the n=2, d=2 closed form off the oracle value.
    Rational oracle_phi0 = oracle_220 * Rational(factorial_int(6)) /
                           Rational(factorial_int(2)) * 2;
    e.printed_value = frac(printed.eval(Rational(0)));
    e.implemented_value = frac(implemented.eval(Rational(0)));
    e.oracle_value = frac(oracle_phi0);
    entries.push_back(std::move(e));
  }

  {
    ErrataEntry e;
    e.id = "closedform-prefactor";
    e.location = "denominator gamma of the assembled closed form "
                 "(two occurrences)";
    e.printed_form = "1 / Gamma(n(p + d(n-1)) + 1)";
    e.implemented_form = "1 / Gamma(n(p+1) + d n(n-1) + 1)";
    e.arbitration = "I(2,2,0)";
    e.printed_value = frac(eval_printed_prefactor(2, 2, 0, ws));
    e.implemented_value = frac(eval_by_jack_expansion(2, 2, 0, ws));
    e.oracle_value = frac(oracle_220);
    entries.push_back(std::move(e));
  }

  {
    ErrataEntry e;
    e.id = "basis-integral-shift";
    e.location = "gamma shift in the basis-element integral";
    e.printed_form = "Gamma(lambda_i + p + 1 + d(n-i+1)/2)";
    e.implemented_form = "Gamma(lambda_i + p + 1 + d(n-i)/2)";
    e.arbitration = "empty partition, n=2, d=2, p=0 (the weight-0 basis integral)";
    Partition empty;
    e.printed_value = frac(jack_basis_integral_printed_shift(empty, 2, 2, 0));
    e.implemented_value = frac(jack_basis_integral(empty, 2, 2, 0));
    e.oracle_value = frac(oracle_J(2, 2, sym_constant(2, Rational(1)),
                                   ws.guard, &ws.oracle_memo));
    entries.push_back(std::move(e));
  }

  {
    ErrataEntry e;
    e.id = "closedform-gamma-structure";
    e.location = "numerator gamma shifts of the assembled closed form "
                 "versus its stated residual degree bound";
    e.printed_form = "Gamma(p + 1 + d(n-i)/2) with residual degree at most d n(n-1)/4";
    e.implemented_form = "Gamma(p + 1 + d(n-i)/2 + floor((d(n-i)+1)/2)), "
                         "which realizes the stated bound";
    e.arbitration = "I(2,2,2), extrapolating each structure from p = 0, 1";
    long bound = phi_degree_bound(2, 2);
    ClosedForm loose = closed_form_loose_shifts(2, 2, ws);
    std::vector<Rational> nodes, values;
    for (long p = 0; p <= bound; ++p) {
      nodes.emplace_back(p);
      values.push_back(loose.phi.eval(Rational(p)));
    }
    ClosedForm truncated = loose;
    truncated.phi = interpolate(nodes, values);
    e.printed_value = frac(closedform_eval(truncated, bound + 1));
    e.implemented_value =
        frac(closedform_eval(ws.cached_closed_form(2, 2), bound + 1));
    e.oracle_value =
        frac(oracle_I(2, 2, static_cast<int>(bound) + 1, ws.guard, &ws.oracle_memo));
    entries.push_back(std::move(e));
  }

  {
    ErrataEntry e;
    e.id = "assembly-scale";
    e.location = "scale of the norm ratio where expansion and basis integral "
                 "are combined";
    e.printed_form = "norm ratio taken at half the basis scale";
    e.implemented_form = "norm ratio at the basis scale";
    e.arbitration = "I(2,2,0)";
    e.printed_value = eval_printed_half_scale(2, 2, 0, ws).to_string();
    e.implemented_value = frac(eval_by_jack_expansion(2, 2, 0, ws));
    e.oracle_value = frac(oracle_220);
    entries.push_back(std::move(e));
  }

  {
    ErrataEntry e;
    e.id = "recursion-reduction";
    e.location = "variable-count reduction formula (scalar, Beta arguments, "
                 "carried elementary factor)";
    SymPoly one_2 = sym_constant(2, Rational(1));
    Rational literal =
        recursion_eval_variant(2, 1, one_2, RecursionVariant::printed_literal, ws);
    e.printed_form =
        "scalar n^(|nu|-n-i-1), Beta(|lambda|+|nu|+1, n-1+k n(n-1)/2+|nu|), and "
        "no elementary factor on the recursive call; the fully literal reading "
        "gives " + frac(literal) + " on the fixture, and correcting the "
        "arguments while still dropping the factor gives the value below";
    e.implemented_form =
        "scalar n^(|nu|-|lambda|-1), Beta(|lambda|-|nu|+1, n+k n(n-1)/2+|nu|), "
        "recursive call carrying the k-th power of the remaining variables";
    e.arbitration = "J(2,1,1) (constant integrand)";
    e.printed_value = frac(recursion_eval_variant(
        2, 1, one_2, RecursionVariant::printed_missing_shift, ws));
    e.implemented_value = frac(recursion_eval(2, 1, one_2, ws));
    e.oracle_value = frac(oracle_J(2, 1, one_2, ws.guard, &ws.oracle_memo));
    entries.push_back(std::move(e));
  }

  {
    ErrataEntry e;
    e.id = "small-case-argument-shift";
    e.location = "explicit two-variable value among the worked small cases";
    e.printed_form = "(2/sqrt(pi)) Gamma(p) Gamma(p+3/2) / Gamma(2p+3)";
    e.implemented_form = "the display at p+1: "
                         "(2/sqrt(pi)) Gamma(p+1) Gamma(p+5/2) / Gamma(2p+5)";
    e.arbitration = "I(2,1,1)";
    e.printed_value = frac(display_two_var(1).rational_value());
    e.implemented_value = frac(eval_by_jack_expansion(2, 1, 1, ws));
    e.oracle_value = frac(oracle_I(2, 1, 1, ws.guard, &ws.oracle_memo));
    entries.push_back(std::move(e));
  }

  {
    ErrataEntry e;
    e.id = "small-case-three-variables";
    e.location = "explicit three-variable value among the worked small cases";
    e.printed_form = "(8p+15) Gamma(p) Gamma(p+3/2) Gamma(p+2) / "
                     "(2 sqrt(pi) Gamma(2p+3) Gamma(3p+7))";
    e.implemented_form = "the same display without the Gamma(2p+3) divisor, "
                         "read at p+1 like the other small cases";
    e.arbitration = "I(3,1,0)";
    e.printed_value = frac(display_three_var_printed(1).rational_value());
    e.implemented_value = frac(eval_by_jack_expansion(3, 1, 0, ws));
    e.oracle_value = frac(oracle_I(3, 1, 0, ws.guard, &ws.oracle_memo));
    entries.push_back(std::move(e));
  }

  {
    ErrataEntry e;
    e.id = "determinant-orientation";
    e.location = "sign convention of the even-power determinant identity";
    e.printed_form = "prod_{i<j}(y_i^2 - y_j^2) = det(y_j^{2(i-1)})";
    e.implemented_form =
        "det(y_j^{2(i-1)}) = (-1)^{n(n-1)/2} prod_{i<j}(y_i^2 - y_j^2) "
        "(harmless where the determinant enters at even power)";
    e.arbitration = "n=2, y=(2,1)";
    std::vector<Rational> y = {Rational(2), Rational(1)};
    Rational det = even_power_determinant(y);
    Rational product = (y[0] * y[0] - y[1] * y[1]);
    e.printed_value = frac(det);
    e.implemented_value = frac(-det);
    e.oracle_value = frac(product);
    entries.push_back(std::move(e));
  }

  check_internal(entries.size() >= 6, "errata ledger lost entries");
  return entries;
}

}  // namespace selberg
