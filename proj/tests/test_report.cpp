// Report assembly: cross-validated runs, JSON emission and field-exact
// parsing, the validation grid, and the errata ledger.
#include "doctest.h"

#include <string>

#include "json.hpp"

#include "errata.hpp"
#include "error.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "workspace.hpp"

using namespace selberg;
using nlohmann::json;

namespace {
const MethodResult* find_method(const EvaluationReport& r, const std::string& name) {
  for (const MethodResult& m : r.methods) {
    if (m.method == name) return &m;
  }
  return nullptr;
}
}  // namespace

TEST_CASE("run_eval with all methods cross-validates") {
  Workspace ws;
  EvaluationReport r = run_eval(2, 2, 0, "all", ws);
  CHECK(r.kind == "eval");
  CHECK(r.agreement);
  CHECK(!r.has_disagreement);
  REQUIRE(r.methods.size() == 4);
  CHECK(r.methods[0].method == "perm");
  CHECK(r.methods[1].method == "jack");
  CHECK(r.methods[2].method == "rec");
  CHECK(r.methods[3].method == "oracle");
  for (const MethodResult& m : r.methods) {
    CHECK(m.status == "ok");
    CHECK(m.has_value);
    CHECK(m.value == make_rational(1, 36));
  }
  const MethodResult* jack = find_method(r, "jack");
  REQUIRE(jack != nullptr);
  CHECK(jack->has_closed_form);
  CHECK(!jack->closed_form_text.empty());
  CHECK(!jack->closed_form_latex.empty());
}

TEST_CASE("odd d drops the permutation route under all") {
  Workspace ws;
  EvaluationReport r = run_eval(2, 1, 0, "all", ws);
  const MethodResult* perm = find_method(r, "perm");
  REQUIRE(perm != nullptr);
  CHECK(perm->status == "not_applicable");
  CHECK(!perm->note.empty());
  CHECK(!perm->has_value);
  CHECK(r.agreement);
  for (const std::string& name : {"jack", "rec", "oracle"}) {
    const MethodResult* m = find_method(r, name);
    REQUIRE(m != nullptr);
    CHECK(m->status == "ok");
    CHECK(m->value == make_rational(1, 16));
  }
}

TEST_CASE("guarded oracle is skipped under all but errors when explicit") {
  Workspace ws;  // default guard: p <= 6
  EvaluationReport r = run_eval(2, 2, 7, "all", ws);
  const MethodResult* oracle = find_method(r, "oracle");
  REQUIRE(oracle != nullptr);
  CHECK(oracle->status == "skipped");
  CHECK(!oracle->note.empty());
  CHECK(r.agreement);

  try {
    run_eval(2, 2, 7, "oracle", ws);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.status() == Status::resource);
  }
  try {
    run_eval(2, 1, 0, "perm", ws);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.status() == Status::usage);
  }
  CHECK_THROWS_AS(run_eval(2, 2, 0, "bogus", ws), Error);
}

TEST_CASE("single-method runs produce one entry") {
  Workspace ws;
  EvaluationReport r = run_eval(2, 2, 1, "oracle", ws);
  REQUIRE(r.methods.size() == 1);
  CHECK(r.methods[0].method == "oracle");
  CHECK(r.methods[0].value == make_rational(1, 480));
  CHECK(r.agreement);
}

TEST_CASE("run_j evaluates the monomial integrals") {
  Workspace ws;
  EvaluationReport r = run_j(2, 2, Partition({1, 1}), "all", ws);
  CHECK(r.kind == "j");
  CHECK(r.n == 2);
  CHECK(r.d == 2);  // kappa rides in the d slot
  CHECK(r.lambda == Partition({1, 1}));
  REQUIRE(r.methods.size() == 2);
  CHECK(r.methods[0].method == "rec");
  CHECK(r.methods[1].method == "oracle");
  for (const MethodResult& m : r.methods) {
    CHECK(m.status == "ok");
    CHECK(m.value == make_rational(1, 360));
  }
  CHECK(r.agreement);

  EvaluationReport single = run_j(2, 1, Partition(), "rec", ws);
  REQUIRE(single.methods.size() == 1);
  CHECK(single.methods[0].value == make_rational(1, 12));
}

TEST_CASE("eval reports round-trip through JSON field-exactly") {
  Workspace ws;
  for (const EvaluationReport& r :
       {run_eval(2, 2, 0, "all", ws), run_eval(2, 1, 1, "all", ws),
        run_j(2, 2, Partition({2}), "all", ws)}) {
    std::string text = eval_report_to_json(r);
    EvaluationReport back = eval_report_from_json(text);
    CHECK(back == r);
  }
  CHECK_THROWS_AS(eval_report_from_json("{}"), Error);
  CHECK_THROWS_AS(eval_report_from_json("not json"), Error);
}

TEST_CASE("JSON shape follows the published schema") {
  Workspace ws;
  json doc = json::parse(eval_report_to_json(run_eval(2, 2, 0, "all", ws)));
  CHECK(doc.at("schema") == "selberg-report-v1");
  CHECK(doc.at("kind") == "eval");
  CHECK(doc.at("n") == 2);
  CHECK(doc.at("d") == 2);
  CHECK(doc.at("p") == 0);
  CHECK(doc.at("agreement") == true);
  CHECK(!doc.contains("first_disagreement"));
  const json& methods = doc.at("methods");
  REQUIRE(methods.size() == 4);
  CHECK(methods[0].at("method") == "perm");
  CHECK(methods[0].at("value").at("num") == "1");
  CHECK(methods[0].at("value").at("den") == "36");
  CHECK(methods[1].contains("closed_form"));
  CHECK(methods[1].at("closed_form").at("text").is_string());

  json jj = json::parse(eval_report_to_json(run_j(2, 2, Partition({1, 1}), "rec", ws)));
  CHECK(jj.at("kind") == "j");
  CHECK(jj.at("kappa") == 2);
  CHECK(jj.at("partition") == "1,1");
  CHECK(!jj.contains("p"));

  json pj = json::parse(phi_report_to_json(run_phi(2, 2, "det", ws)));
  CHECK(pj.at("schema") == "selberg-report-v1");
  CHECK(pj.at("kind") == "phi");
  CHECK(pj.at("phi").at("text") == "8p + 20");

  json vj = json::parse(validation_report_to_json(run_validate(2, 2, 1, false, ws)));
  CHECK(vj.at("kind") == "validate");
  CHECK(vj.at("all_passed") == true);

  json ej = json::parse(errata_to_json(errata_entries(ws)));
  CHECK(ej.at("kind") == "errata");
  CHECK(ej.at("entries").size() >= 6);
}

TEST_CASE("run_phi") {
  Workspace ws;
  PhiReport det = run_phi(2, 2, "det", ws);
  CHECK(det.phi == UniPoly(std::vector<Rational>{Rational(20), Rational(8)}));
  CHECK(det.degree == 1);
  CHECK(det.degree_bound == 1);
  PhiReport perm = run_phi(2, 2, "perm", ws);
  CHECK(perm.phi == det.phi);
  PhiReport jack = run_phi(2, 1, "jack", ws);
  CHECK(jack.phi == UniPoly::constant(Rational(2)));
  CHECK(jack.degree == 0);
  CHECK(jack.degree_bound == 0);
  CHECK_THROWS_AS(run_phi(2, 1, "det", ws), Error);
  CHECK_THROWS_AS(run_phi(2, 1, "perm", ws), Error);
  CHECK_THROWS_AS(run_phi(2, 2, "bogus", ws), Error);
}

TEST_CASE("run_jack") {
  Workspace ws;
  JackReport r = run_jack(make_rational(1, 2), 3, Partition({2}), ws);
  REQUIRE(r.terms.size() == 2);
  CHECK(r.terms[0].lambda == Partition({2}));
  CHECK(r.terms[0].coefficient == 1);
  CHECK(r.terms[1].lambda == Partition({1, 1}));
  CHECK(r.terms[1].coefficient == make_rational(4, 3));
  CHECK(r.text == "m[2] + 4/3 m[1,1]");
  CHECK(!r.latex.empty());
  CHECK_THROWS_AS(run_jack(Rational(0), 3, Partition({2}), ws), Error);
  CHECK_THROWS_AS(run_jack(Rational(1), 0, Partition({2}), ws), Error);
}

TEST_CASE("run_validate passes clean and fails when poisoned") {
  Workspace ws;
  ValidationReport ok = run_validate(2, 2, 2, false, ws);
  CHECK(ok.all_passed);
  REQUIRE(ok.checks.size() == 6);
  CHECK(ok.checks[0].name == "golden-fixtures");
  for (const ValidationCheck& c : ok.checks) {
    CHECK(c.passed);
    CHECK(!c.detail.empty());
  }

  ValidationReport bad = run_validate(2, 2, 2, true, ws);
  CHECK(!bad.all_passed);
  bool golden_failed = false;
  for (const ValidationCheck& c : bad.checks) {
    if (c.name == "golden-fixtures") golden_failed = !c.passed;
  }
  CHECK(golden_failed);
}

TEST_CASE("errata ledger arbitrates every entry against the oracle") {
  Workspace ws;
  std::vector<ErrataEntry> entries = errata_entries(ws);
  CHECK(entries.size() >= 6);
  for (const ErrataEntry& e : entries) {
    CHECK(!e.id.empty());
    CHECK(!e.location.empty());
    CHECK(!e.printed_form.empty());
    CHECK(!e.implemented_form.empty());
    CHECK(!e.arbitration.empty());
    CHECK(e.printed_value != e.oracle_value);
    CHECK(e.implemented_value == e.oracle_value);
  }
  for (size_t i = 0; i < entries.size(); ++i) {
    for (size_t j = i + 1; j < entries.size(); ++j) {
      CHECK(entries[i].id != entries[j].id);
    }
  }
}
