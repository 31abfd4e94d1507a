// Assembly of evaluation runs into reports: cross-validated evaluations,
// polynomial-factor extraction, Jack expansions, the self-check grid, and the
// errata ledger, each with a JSON form under the schema selberg-report-v1.
// Rationals are emitted as {"num": "...", "den": "..."} decimal strings.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "closedform.hpp"
#include "errata.hpp"
#include "partition.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace selberg {

struct Workspace;

struct MethodResult {
  std::string method;             // perm | jack | rec | oracle
  std::string status;             // ok | not_applicable | skipped
  std::string note;               // reason when status != ok
  bool has_value = false;
  Rational value = 0;
  bool has_closed_form = false;
  ClosedForm closed_form;
  std::string closed_form_text;
  std::string closed_form_latex;
  long elapsed_ms = 0;

  bool operator==(const MethodResult& o) const {
    return method == o.method && status == o.status && note == o.note &&
           has_value == o.has_value && value == o.value &&
           has_closed_form == o.has_closed_form && closed_form == o.closed_form &&
           closed_form_text == o.closed_form_text &&
           closed_form_latex == o.closed_form_latex && elapsed_ms == o.elapsed_ms;
  }
};

struct EvaluationReport {
  std::string kind;  // "eval" (I with n, d, p) or "j" (J with n, kappa, partition)
  int n = 0;
  int d = 0;  // kappa when kind == "j"
  int p = 0;  // unused when kind == "j"
  Partition lambda;
  std::vector<MethodResult> methods;
  bool agreement = true;
  bool has_disagreement = false;
  std::pair<std::string, std::string> first_disagreement;

  bool operator==(const EvaluationReport& o) const {
    return kind == o.kind && n == o.n && d == o.d && p == o.p &&
           lambda == o.lambda && methods == o.methods && agreement == o.agreement &&
           has_disagreement == o.has_disagreement &&
           first_disagreement == o.first_disagreement;
  }
};

struct PhiReport {
  int n = 0;
  int d = 0;
  std::string method;  // perm | det | jack
  UniPoly phi;
  long degree = 0;
  long degree_bound = 0;
};

struct JackTermReport {
  Partition lambda;
  Rational coefficient;
};

struct JackReport {
  Rational alpha;
  int nvars = 0;
  Partition lambda;
  std::vector<JackTermReport> terms;  // descending by partition
  std::string text;
  std::string latex;
};

struct ValidationCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ValidationReport {
  int max_n = 0;
  int max_d = 0;
  int max_p = 0;
  std::vector<ValidationCheck> checks;
  bool all_passed = true;
};

// method: perm | jack | rec | oracle | all.  An explicit method that does not
// apply (perm with odd d, oracle beyond the guard) is an error; under "all"
// those entries are reported as not applicable / skipped instead.
EvaluationReport run_eval(int n, int d, int p, const std::string& method, Workspace& ws);

// method: rec | oracle | all, evaluating J(n, kappa, m_lambda).
EvaluationReport run_j(int n, int kappa, const Partition& lambda,
                       const std::string& method, Workspace& ws);

PhiReport run_phi(int n, int d, const std::string& method, Workspace& ws);

JackReport run_jack(const Rational& alpha, int nvars, const Partition& lambda,
                    Workspace& ws);

ValidationReport run_validate(int max_n, int max_d, int max_p,
                              bool inject_disagreement, Workspace& ws);

// JSON emitters; eval reports parse back field-exactly.
std::string eval_report_to_json(const EvaluationReport& report);
EvaluationReport eval_report_from_json(const std::string& text);
std::string phi_report_to_json(const PhiReport& report);
std::string jack_report_to_json(const JackReport& report);
std::string validation_report_to_json(const ValidationReport& report);
std::string errata_to_json(const std::vector<ErrataEntry>& entries);

}  // namespace selberg
