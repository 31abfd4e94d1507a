#include "report.hpp"

#include <chrono>
#include <future>
#include <set>
#include <string>

#include "json.hpp"

#include "error.hpp"
#include "jackeval.hpp"
#include "oracle.hpp"
#include "permsum.hpp"
#include "recurse.hpp"
#include "sympoly.hpp"
#include "workspace.hpp"

namespace selberg {

namespace {

using nlohmann::json;

json rational_to_json(const Rational& r) {
  return json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

Rational rational_from_json(const json& j) {
  check_usage(j.is_object() && j.contains("num") && j.contains("den"),
              "malformed rational in report JSON");
  return rational_from_string(j.at("num").get<std::string>() + "/" +
                              j.at("den").get<std::string>());
}

HalfInt halfint_from_string(const std::string& text) {
  size_t slash = text.find('/');
  if (slash == std::string::npos) {
    return HalfInt(rational_to_long(rational_from_string(text)));
  }
  check_usage(text.substr(slash + 1) == "2", "malformed half-integer in report JSON");
  return HalfInt::from_twice(rational_to_long(rational_from_string(text.substr(0, slash))));
}

json unipoly_to_json(const UniPoly& poly) {
  json coeffs = json::array();
  for (const Rational& c : poly.coefficients()) coeffs.push_back(rational_to_json(c));
  return coeffs;
}

UniPoly unipoly_from_json(const json& j) {
  check_usage(j.is_array(), "malformed polynomial in report JSON");
  std::vector<Rational> coeffs;
  for (const json& c : j) coeffs.push_back(rational_from_json(c));
  return UniPoly(std::move(coeffs));
}

json closed_form_to_json(const ClosedForm& cf, const std::string& text,
                         const std::string& latex) {
  json shifts = json::array();
  for (const HalfInt& s : cf.numerator_gamma_shifts) shifts.push_back(s.to_string());
  return json{{"coefficient", rational_to_json(cf.coefficient)},
              {"sqrt_pi_power", cf.sqrt_pi_power},
              {"numerator_gamma_shifts", shifts},
              {"denominator_stretch", cf.denominator_stretch},
              {"denominator_offset", cf.denominator_offset},
              {"phi", unipoly_to_json(cf.phi)},
              {"text", text},
              {"latex", latex}};
}

ClosedForm closed_form_from_json(const json& j, std::string& text, std::string& latex) {
  ClosedForm cf;
  cf.coefficient = rational_from_json(j.at("coefficient"));
  cf.sqrt_pi_power = j.at("sqrt_pi_power").get<long>();
  for (const json& s : j.at("numerator_gamma_shifts")) {
    cf.numerator_gamma_shifts.push_back(halfint_from_string(s.get<std::string>()));
  }
  cf.denominator_stretch = j.at("denominator_stretch").get<long>();
  cf.denominator_offset = j.at("denominator_offset").get<long>();
  cf.phi = unipoly_from_json(j.at("phi"));
  text = j.at("text").get<std::string>();
  latex = j.at("latex").get<std::string>();
  return cf;
}

json method_to_json(const MethodResult& m) {
  json j{{"method", m.method}, {"status", m.status}, {"elapsed_ms", m.elapsed_ms}};
  if (!m.note.empty()) j["note"] = m.note;
  if (m.has_value) j["value"] = rational_to_json(m.value);
  if (m.has_closed_form) {
    j["closed_form"] =
        closed_form_to_json(m.closed_form, m.closed_form_text, m.closed_form_latex);
  }
  return j;
}

MethodResult method_from_json(const json& j) {
  MethodResult m;
  m.method = j.at("method").get<std::string>();
  m.status = j.at("status").get<std::string>();
  m.elapsed_ms = j.at("elapsed_ms").get<long>();
  if (j.contains("note")) m.note = j.at("note").get<std::string>();
  if (j.contains("value")) {
    m.has_value = true;
    m.value = rational_from_json(j.at("value"));
  }
  if (j.contains("closed_form")) {
    m.has_closed_form = true;
    m.closed_form =
        closed_form_from_json(j.at("closed_form"), m.closed_form_text, m.closed_form_latex);
  }
  return m;
}

long elapsed_ms_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

// Runs one pipeline and fills value/timing; the caller fixed method and status.
template <typename Fn>
MethodResult timed_method(const std::string& name, Fn&& fn) {
  MethodResult m;
  m.method = name;
  m.status = "ok";
  auto start = std::chrono::steady_clock::now();
  m.value = fn();
  m.has_value = true;
  m.elapsed_ms = elapsed_ms_since(start);
  return m;
}

void finish_agreement(EvaluationReport& report) {
  report.agreement = true;
  report.has_disagreement = false;
  for (size_t i = 0; i < report.methods.size() && !report.has_disagreement; ++i) {
    if (!report.methods[i].has_value) continue;
    for (size_t k = i + 1; k < report.methods.size(); ++k) {
      if (!report.methods[k].has_value) continue;
      if (report.methods[i].value != report.methods[k].value) {
        report.agreement = false;
        report.has_disagreement = true;
        report.first_disagreement = {report.methods[i].method, report.methods[k].method};
        break;
      }
    }
  }
}

bool within_guard(const OracleGuard& guard, int n, int d, int p) {
  return n <= guard.max_n && d <= guard.max_d && p <= guard.max_p;
}

std::string guard_note(const OracleGuard& guard) {
  return "beyond the oracle guard (n <= " + std::to_string(guard.max_n) +
         ", d <= " + std::to_string(guard.max_d) +
         ", p <= " + std::to_string(guard.max_p) + "); request it explicitly to override";
}

std::string jack_terms_to_latex(const std::vector<JackTermReport>& terms) {
  std::string out;
  for (const JackTermReport& t : terms) {
    Rational c = t.coefficient;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Rational a = abs(c);
    if (a != 1) out += rational_to_latex(a) + " ";
    out += "m_{" + t.lambda.to_latex() + "}";
  }
  return out.empty() ? "0" : out;
}

}  // namespace

EvaluationReport run_eval(int n, int d, int p, const std::string& method, Workspace& ws) {
  check_usage(n >= 1, "n must be at least 1");
  check_usage(d >= 1, "d must be at least 1");
  check_usage(p >= 0, "p must be nonnegative");
  static const std::set<std::string> known = {"perm", "jack", "rec", "oracle", "all"};
  check_usage(known.count(method) == 1,
              "unknown method '" + method + "' (perm, jack, rec, oracle, all)");
  bool all = method == "all";
  check_usage(!(method == "perm" && d % 2 != 0), "method perm requires even d");

  EvaluationReport report;
  report.kind = "eval";
  report.n = n;
  report.d = d;
  report.p = p;

  std::vector<std::pair<std::string, std::future<MethodResult>>> tasks;
  auto schedule = [&](const std::string& name, auto&& fn) {
    tasks.emplace_back(name, std::async(std::launch::async, std::forward<decltype(fn)>(fn)));
  };

  if (method == "perm" || (all && d % 2 == 0)) {
    schedule("perm", [n, d, p, &ws] {
      return timed_method("perm",
                          [&] { return eval_by_permutation_sum(n, d, p, ws.threads); });
    });
  }
  if (method == "jack" || all) {
    schedule("jack", [n, d, p, &ws] {
      MethodResult m = timed_method("jack", [&] { return eval_by_jack_expansion(n, d, p, ws); });
      auto start = std::chrono::steady_clock::now();
      const ClosedForm& cf = ws.cached_closed_form(n, d);
      m.elapsed_ms += elapsed_ms_since(start);
      check_internal(closedform_eval(cf, p) == m.value,
                     "closed form disagrees with its own expansion");
      m.has_closed_form = true;
      m.closed_form = cf;
      m.closed_form_text = closedform_to_string(cf);
      m.closed_form_latex = closedform_to_latex(cf);
      return m;
    });
  }
  if (method == "rec" || all) {
    schedule("rec", [n, d, p, &ws] {
      return timed_method("rec", [&] { return eval_by_recursion(n, d, p, ws); });
    });
  }
  if (method == "oracle" || (all && within_guard(ws.guard, n, d, p))) {
    schedule("oracle", [n, d, p, &ws] {
      return timed_method("oracle",
                          [&] { return oracle_I(n, d, p, ws.guard, &ws.oracle_memo); });
    });
  }

  std::vector<MethodResult> collected;
  std::exception_ptr first_error;
  for (auto& [name, fut] : tasks) {
    try {
      collected.push_back(fut.get());
    } catch (...) {
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);

  // Canonical order with the non-run entries explained.
  for (const std::string& name : {"perm", "jack", "rec", "oracle"}) {
    bool wanted = all || method == name;
    if (!wanted) continue;
    bool found = false;
    for (MethodResult& m : collected) {
      if (m.method == name) {
        report.methods.push_back(std::move(m));
        found = true;
        break;
      }
    }
    if (found) continue;
    MethodResult m;
    m.method = name;
    if (name == "perm") {
      m.status = "not_applicable";
      m.note = "odd d: the summand is not a finite product of gamma factors";
    } else {
      m.status = "skipped";
      m.note = guard_note(ws.guard);
    }
    report.methods.push_back(std::move(m));
  }

  finish_agreement(report);
  return report;
}

EvaluationReport run_j(int n, int kappa, const Partition& lambda,
                       const std::string& method, Workspace& ws) {
  check_usage(n >= 1, "n must be at least 1");
  check_usage(kappa >= 0, "kappa must be nonnegative");
  check_usage(lambda.length() <= n, "partition has more parts than variables");
  static const std::set<std::string> known = {"rec", "oracle", "all"};
  check_usage(known.count(method) == 1,
              "unknown method '" + method + "' (rec, oracle, all)");
  bool all = method == "all";

  EvaluationReport report;
  report.kind = "j";
  report.n = n;
  report.d = kappa;
  report.lambda = lambda;

  SymPoly f = sym_monomial(lambda, n);

  if (method == "rec" || all) {
    report.methods.push_back(
        timed_method("rec", [&] { return recursion_eval(n, kappa, f, ws); }));
  }
  if (method == "oracle" || (all && within_guard(ws.guard, n, kappa, 0))) {
    report.methods.push_back(timed_method(
        "oracle", [&] { return oracle_J(n, kappa, f, ws.guard, &ws.oracle_memo); }));
  } else if (all) {
    MethodResult m;
    m.method = "oracle";
    m.status = "skipped";
    m.note = guard_note(ws.guard);
    report.methods.push_back(std::move(m));
  }

  finish_agreement(report);
  return report;
}

PhiReport run_phi(int n, int d, const std::string& method, Workspace& ws) {
  check_usage(n >= 1, "n must be at least 1");
  check_usage(d >= 1, "d must be at least 1");
  static const std::set<std::string> known = {"perm", "det", "jack"};
  check_usage(known.count(method) == 1,
              "unknown method '" + method + "' (perm, det, jack)");

  PhiReport report;
  report.n = n;
  report.d = d;
  report.method = method;
  if (method == "perm") {
    check_usage(d % 2 == 0, "method perm requires even d");
    report.phi = phi_by_arrangement_sum(n, d, ws.threads);
    report.degree_bound = static_cast<long>(d) * n * (n - 1) / 4;
  } else if (method == "det") {
    check_usage(d == 2, "the determinant form exists only for d = 2");
    report.phi = phi_by_determinant(n);
    report.degree_bound = static_cast<long>(n) * (n - 1) / 2;
  } else {
    report.phi = ws.cached_closed_form(n, d).phi;
    report.degree_bound = phi_degree_bound(n, d);
  }
  report.degree = report.phi.degree();
  return report;
}

JackReport run_jack(const Rational& alpha, int nvars, const Partition& lambda,
                    Workspace& ws) {
  check_usage(nvars >= 1, "nvars must be at least 1");
  check_usage(alpha > 0, "alpha must be positive");
  JackReport report;
  report.alpha = alpha;
  report.nvars = nvars;
  report.lambda = lambda;
  SymPoly poly = jack_restricted(lambda, alpha, nvars, ws.jacktable, ws.symcache);
  for (auto it = poly.terms.rbegin(); it != poly.terms.rend(); ++it) {
    report.terms.push_back(JackTermReport{it->first, it->second});
  }
  report.text = poly.to_string();
  report.latex = jack_terms_to_latex(report.terms);
  return report;
}

ValidationReport run_validate(int max_n, int max_d, int max_p,
                              bool inject_disagreement, Workspace& ws) {
  check_usage(max_n >= 1 && max_d >= 1 && max_p >= 0,
              "validate needs max-n >= 1, max-d >= 1, max-p >= 0");
  ValidationReport report;
  report.max_n = max_n;
  report.max_d = max_d;
  report.max_p = max_p;

  auto add_check = [&](ValidationCheck check) {
    report.all_passed = report.all_passed && check.passed;
    report.checks.push_back(std::move(check));
  };

  {
    // Frozen golden constants; each is recomputed structurally (jack pipeline
    // or recursion) and by brute force, so no pipeline certifies itself.
    ValidationCheck check;
    check.name = "golden-fixtures";
    long mismatches = 0;
    long count = 0;
    std::string first;
    auto expect_i = [&](int n, int d, int p, const Rational& expected) {
      ++count;
      Rational structural = eval_by_jack_expansion(n, d, p, ws);
      bool ok = structural == expected;
      if (ok && within_guard(ws.guard, n, d, p)) {
        ok = oracle_I(n, d, p, ws.guard, &ws.oracle_memo) == expected;
      }
      if (!ok && first.empty()) {
        first = "I(" + std::to_string(n) + "," + std::to_string(d) + "," +
                std::to_string(p) + ") != " + rational_to_fraction_string(expected);
      }
      if (!ok) ++mismatches;
    };
    auto expect_j = [&](int n, int kappa, const Partition& lambda,
                        const Rational& expected) {
      ++count;
      SymPoly f = sym_monomial(lambda, n);
      bool ok = recursion_eval(n, kappa, f, ws) == expected;
      if (ok && within_guard(ws.guard, n, kappa, lambda.weight())) {
        ok = oracle_J(n, kappa, f, ws.guard, &ws.oracle_memo) == expected;
      }
      if (!ok && first.empty()) {
        first = "J(" + std::to_string(n) + "," + std::to_string(kappa) + ",m[" +
                lambda.to_string() + "]) != " + rational_to_fraction_string(expected);
      }
      if (!ok) ++mismatches;
    };

    expect_i(2, 1, 0, inject_disagreement ? make_rational(1, 15) : make_rational(1, 16));
    expect_i(2, 1, 1, make_rational(1, 192));
    expect_i(2, 2, 0, make_rational(1, 36));
    expect_j(2, 1, Partition(), make_rational(1, 12));
    expect_j(2, 2, Partition(), make_rational(1, 24));
    expect_j(2, 2, Partition({1, 1}), make_rational(1, 360));
    for (int d = 1; d <= 4; ++d) {
      for (int p = 0; p <= 6; ++p) {
        expect_i(1, d, p, make_rational(1, p + 1));
      }
    }
    check.passed = mismatches == 0;
    check.detail = check.passed
                       ? std::to_string(count) + " fixtures matched"
                       : std::to_string(mismatches) + " of " + std::to_string(count) +
                             " fixtures mismatched, first: " + first;
    add_check(std::move(check));
  }

  {
    ValidationCheck check;
    check.name = "cross-grid";
    long points = 0;
    long comparisons = 0;
    std::string first;
    for (int n = 1; n <= max_n; ++n) {
      for (int d = 1; d <= max_d; ++d) {
        for (int p = 0; p <= max_p; ++p) {
          ++points;
          Rational reference = eval_by_jack_expansion(n, d, p, ws);
          auto compare = [&](const char* name, const Rational& other) {
            ++comparisons;
            if (other != reference && first.empty()) {
              first = std::string(name) + " at (" + std::to_string(n) + "," +
                      std::to_string(d) + "," + std::to_string(p) + ")";
            }
          };
          compare("rec", eval_by_recursion(n, d, p, ws));
          if (d % 2 == 0) {
            compare("perm", eval_by_permutation_sum(n, d, p, ws.threads));
          }
          if (n <= 3 && d <= 3 && p <= 4 && within_guard(ws.guard, n, d, p)) {
            compare("oracle", oracle_I(n, d, p, ws.guard, &ws.oracle_memo));
          }
        }
      }
    }
    check.passed = first.empty();
    check.detail = check.passed ? std::to_string(comparisons) + " comparisons across " +
                                      std::to_string(points) + " grid points agreed"
                                : "first disagreement: " + first;
    add_check(std::move(check));
  }

  {
    // Sorted column sums of every arrangement stay above d(i+2)/2 (zero-based).
    ValidationCheck check;
    check.name = "column-sum-bounds";
    long arrangements = 0;
    std::string first;
    for (int n = 1; n <= std::min(max_n, 4); ++n) {
      for (int d = 1; d <= std::min(max_d, 3); ++d) {
        for (const Arrangement& arr : all_arrangements(n, d)) {
          ++arrangements;
          GammaVector gv = gamma_vector(arr);
          for (size_t i = 0; i < gv.gamma.size() && first.empty(); ++i) {
            if (2L * gv.gamma[i] < static_cast<long>(d) * static_cast<long>(i + 2)) {
              first = "n=" + std::to_string(n) + ", d=" + std::to_string(d);
            }
          }
        }
      }
    }
    check.passed = first.empty();
    check.detail = check.passed
                       ? std::to_string(arrangements) + " arrangements respected the bound"
                       : "violated at " + first;
    add_check(std::move(check));
  }

  {
    // Every partition dominated by d * staircase keeps each part at or above
    // floor((d(n-i)+1)/2).
    ValidationCheck check;
    check.name = "part-minima";
    long partitions = 0;
    std::string first;
    for (int n = 1; n <= std::min(max_n, 5); ++n) {
      for (int d = 1; d <= std::min(max_d, 4); ++d) {
        std::vector<int> target_parts;
        for (int i = 0; i + 1 < n; ++i) target_parts.push_back(d * (n - 1 - i));
        Partition target(target_parts);
        std::vector<int> minima = minimal_parts(n, d);
        for (const Partition& lambda : partitions_dominated_by(target, n)) {
          ++partitions;
          std::vector<int> padded = lambda.padded(n);
          for (int i = 0; i < n && first.empty(); ++i) {
            if (padded[static_cast<size_t>(i)] < minima[static_cast<size_t>(i)]) {
              first = lambda.to_bracket_string() + " at n=" + std::to_string(n) +
                      ", d=" + std::to_string(d);
            }
          }
        }
      }
    }
    check.passed = first.empty();
    check.detail = check.passed
                       ? std::to_string(partitions) + " dominated partitions respected the minima"
                       : "violated by " + first;
    add_check(std::move(check));
  }

  {
    ValidationCheck check;
    check.name = "determinant-identity";
    std::string first;
    long count = 0;
    if (max_d >= 2) {
      for (int n = 1; n <= std::min(max_n, 4); ++n) {
        ++count;
        if (!(phi_by_determinant(n) == phi_by_arrangement_sum(n, 2, ws.threads))) {
          first = "n=" + std::to_string(n);
          break;
        }
      }
    }
    check.passed = first.empty();
    check.detail = check.passed ? "determinant and arrangement-sum polynomials agree for " +
                                      std::to_string(count) + " sizes"
                                : "mismatch at " + first;
    add_check(std::move(check));
  }

  {
    // The residual polynomial attains its degree bound exactly.
    ValidationCheck check;
    check.name = "degree-realization";
    long pairs = 0;
    std::string first;
    for (const auto& [n, d] : std::vector<std::pair<int, int>>{
             {2, 1}, {2, 2}, {3, 1}, {3, 2}, {2, 4}}) {
      if (n > max_n || d > max_d) continue;
      ++pairs;
      const ClosedForm& cf = ws.cached_closed_form(n, d);
      if (cf.phi.degree() != phi_degree_bound(n, d) && first.empty()) {
        first = "(" + std::to_string(n) + "," + std::to_string(d) + ")";
      }
    }
    check.passed = first.empty();
    check.detail = check.passed
                       ? std::to_string(pairs) + " closed forms realized the bound exactly"
                       : "bound not attained at " + first;
    add_check(std::move(check));
  }

  return report;
}

std::string eval_report_to_json(const EvaluationReport& report) {
  json j;
  j["schema"] = "selberg-report-v1";
  j["kind"] = report.kind;
  j["n"] = report.n;
  if (report.kind == "j") {
    j["kappa"] = report.d;
    j["partition"] = report.lambda.to_string();
  } else {
    j["d"] = report.d;
    j["p"] = report.p;
  }
  json methods = json::array();
  for (const MethodResult& m : report.methods) methods.push_back(method_to_json(m));
  j["methods"] = std::move(methods);
  j["agreement"] = report.agreement;
  if (report.has_disagreement) {
    j["first_disagreement"] =
        json::array({report.first_disagreement.first, report.first_disagreement.second});
  }
  return j.dump(2);
}

EvaluationReport eval_report_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  check_usage(!j.is_discarded(), "malformed report JSON");
  check_usage(j.value("schema", "") == "selberg-report-v1", "unknown report schema");
  EvaluationReport report;
  report.kind = j.at("kind").get<std::string>();
  report.n = j.at("n").get<int>();
  if (report.kind == "j") {
    report.d = j.at("kappa").get<int>();
    report.lambda = Partition::parse(j.at("partition").get<std::string>());
  } else {
    check_usage(report.kind == "eval", "unknown report kind");
    report.d = j.at("d").get<int>();
    report.p = j.at("p").get<int>();
  }
  for (const json& m : j.at("methods")) report.methods.push_back(method_from_json(m));
  report.agreement = j.at("agreement").get<bool>();
  if (j.contains("first_disagreement")) {
    report.has_disagreement = true;
    report.first_disagreement = {j.at("first_disagreement").at(0).get<std::string>(),
                                 j.at("first_disagreement").at(1).get<std::string>()};
  }
  return report;
}

std::string phi_report_to_json(const PhiReport& report) {
  json j;
  j["schema"] = "selberg-report-v1";
  j["kind"] = "phi";
  j["n"] = report.n;
  j["d"] = report.d;
  j["method"] = report.method;
  j["phi"] = json{{"coefficients", unipoly_to_json(report.phi)},
                  {"text", report.phi.to_string()},
                  {"latex", report.phi.to_latex()}};
  j["degree"] = report.degree;
  j["degree_bound"] = report.degree_bound;
  return j.dump(2);
}

std::string jack_report_to_json(const JackReport& report) {
  json j;
  j["schema"] = "selberg-report-v1";
  j["kind"] = "jack";
  j["alpha"] = rational_to_json(report.alpha);
  j["nvars"] = report.nvars;
  j["partition"] = report.lambda.to_string();
  json terms = json::array();
  for (const JackTermReport& t : report.terms) {
    terms.push_back(json{{"partition", t.lambda.to_string()},
                         {"coefficient", rational_to_json(t.coefficient)}});
  }
  j["terms"] = std::move(terms);
  j["text"] = report.text;
  j["latex"] = report.latex;
  return j.dump(2);
}

std::string validation_report_to_json(const ValidationReport& report) {
  json j;
  j["schema"] = "selberg-report-v1";
  j["kind"] = "validate";
  j["max_n"] = report.max_n;
  j["max_d"] = report.max_d;
  j["max_p"] = report.max_p;
  json checks = json::array();
  for (const ValidationCheck& c : report.checks) {
    checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  j["all_passed"] = report.all_passed;
  return j.dump(2);
}

std::string errata_to_json(const std::vector<ErrataEntry>& entries) {
  json j;
  j["schema"] = "selberg-report-v1";
  j["kind"] = "errata";
  json array = json::array();
  for (const ErrataEntry& e : entries) {
    array.push_back(json{{"id", e.id},
                         {"location", e.location},
                         {"printed_form", e.printed_form},
                         {"implemented_form", e.implemented_form},
                         {"arbitration", e.arbitration},
                         {"printed_value", e.printed_value},
                         {"implemented_value", e.implemented_value},
                         {"oracle_value", e.oracle_value}});
  }
  j["entries"] = std::move(array);
  return j.dump(2);
}

}  // namespace selberg
