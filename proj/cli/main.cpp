// Command-line front end.  Talks to the library exclusively through the C
// API and renders its JSON reports for the terminal; --json passes them
// through verbatim.
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "selberg/selberg.h"

namespace {

using nlohmann::json;

struct CtxDeleter {
  void operator()(selberg_ctx* ctx) const { selberg_ctx_free(ctx); }
};
using CtxPtr = std::unique_ptr<selberg_ctx, CtxDeleter>;

struct StringDeleter {
  void operator()(char* s) const { selberg_string_free(s); }
};
using JsonPtr = std::unique_ptr<char, StringDeleter>;

std::string rational_text(const json& r) {
  std::string num = r.at("num").get<std::string>();
  std::string den = r.at("den").get<std::string>();
  return den == "1" ? num : num + "/" + den;
}

void render_eval(const json& j, bool latex) {
  if (j.at("kind") == "j") {
    std::printf("J(n=%d, kappa=%d, m[%s])\n", j.at("n").get<int>(),
                j.at("kappa").get<int>(),
                j.at("partition").get<std::string>().c_str());
  } else {
    std::printf("I(n=%d, d=%d, p=%d)\n", j.at("n").get<int>(), j.at("d").get<int>(),
                j.at("p").get<int>());
  }
  for (const json& m : j.at("methods")) {
    std::string method = m.at("method").get<std::string>();
    std::string status = m.at("status").get<std::string>();
    if (status == "ok") {
      std::printf("  %-7s %s   [%lld ms]\n", method.c_str(),
                  rational_text(m.at("value")).c_str(),
                  static_cast<long long>(m.at("elapsed_ms").get<long>()));
    } else {
      std::printf("  %-7s %s: %s\n", method.c_str(),
                  status == "not_applicable" ? "not applicable" : "skipped",
                  m.value("note", "").c_str());
    }
    if (m.contains("closed_form")) {
      std::printf("          closed form: %s\n",
                  m.at("closed_form").at("text").get<std::string>().c_str());
      if (latex) {
        std::printf("          latex: %s\n",
                    m.at("closed_form").at("latex").get<std::string>().c_str());
      }
    }
  }
  if (j.at("agreement").get<bool>()) {
    std::printf("agreement: yes\n");
  } else {
    std::printf("agreement: NO (%s vs %s)\n",
                j.at("first_disagreement").at(0).get<std::string>().c_str(),
                j.at("first_disagreement").at(1).get<std::string>().c_str());
  }
}

void render_phi(const json& j, bool latex) {
  std::printf("Phi(n=%d, d=%d, method=%s) = %s\n", j.at("n").get<int>(),
              j.at("d").get<int>(), j.at("method").get<std::string>().c_str(),
              j.at("phi").at("text").get<std::string>().c_str());
  std::printf("degree %lld, bound %lld\n",
              static_cast<long long>(j.at("degree").get<long>()),
              static_cast<long long>(j.at("degree_bound").get<long>()));
  if (latex) {
    std::printf("latex: %s\n", j.at("phi").at("latex").get<std::string>().c_str());
  }
}

void render_jack(const json& j, bool latex) {
  json alpha = j.at("alpha");
  std::printf("P[%s], alpha = %s, %d variables\n",
              j.at("partition").get<std::string>().c_str(),
              rational_text(alpha).c_str(), j.at("nvars").get<int>());
  std::printf("  %s\n", j.at("text").get<std::string>().c_str());
  if (latex) std::printf("latex: %s\n", j.at("latex").get<std::string>().c_str());
}

void render_validate(const json& j) {
  std::printf("validation grid up to n<=%d, d<=%d, p<=%d\n", j.at("max_n").get<int>(),
              j.at("max_d").get<int>(), j.at("max_p").get<int>());
  for (const json& c : j.at("checks")) {
    std::printf("  [%s] %s: %s\n", c.at("passed").get<bool>() ? "PASS" : "FAIL",
                c.at("name").get<std::string>().c_str(),
                c.at("detail").get<std::string>().c_str());
  }
  std::printf(j.at("all_passed").get<bool>() ? "all checks passed\n"
                                             : "FAILURES PRESENT\n");
}

void render_errata(const json& j) {
  const json& entries = j.at("entries");
  std::printf("documented discrepancies: %zu entries\n", entries.size());
  for (const json& e : entries) {
    std::printf("\n* %s — %s\n", e.at("id").get<std::string>().c_str(),
                e.at("location").get<std::string>().c_str());
    std::printf("  printed:     %s\n", e.at("printed_form").get<std::string>().c_str());
    std::printf("  implemented: %s\n",
                e.at("implemented_form").get<std::string>().c_str());
    std::printf("  fixture %s: printed %s, implemented %s, direct %s\n",
                e.at("arbitration").get<std::string>().c_str(),
                e.at("printed_value").get<std::string>().c_str(),
                e.at("implemented_value").get<std::string>().c_str(),
                e.at("oracle_value").get<std::string>().c_str());
  }
}

int finish(selberg_ctx* ctx, int rc, JsonPtr out, bool json_out, bool latex,
           void (*render)(const json&, bool)) {
  if (out != nullptr) {
    if (json_out) {
      std::printf("%s\n", out.get());
    } else {
      json parsed = json::parse(out.get(), nullptr, false);
      if (parsed.is_discarded()) {
        std::fprintf(stderr, "error: unreadable report\n");
        return SELBERG_INTERNAL;
      }
      render(parsed, latex);
    }
  }
  if (rc != SELBERG_OK) {
    std::fprintf(stderr, "error: %s\n", selberg_last_error(ctx));
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact evaluation of Selberg-like integrals over the ordered simplex"};
  app.fallthrough();
  app.require_subcommand(1);

  bool json_out = false;
  bool latex = false;
  std::string cache_dir;
  int threads = 0;
  int guard_n = 4, guard_d = 4, guard_p = 6;
  app.add_flag("--json", json_out, "emit the JSON report instead of text");
  app.add_flag("--latex", latex, "include LaTeX renderings in text output");
  app.add_option("--cache-dir", cache_dir,
                 "Jack cache directory (default: SELBERG_CACHE_DIR, else the "
                 "platform cache directory)");
  app.add_option("--threads", threads, "worker threads for the permutation sum")
      ->capture_default_str();
  app.add_option("--oracle-max-n", guard_n, "brute-force guard: largest n")
      ->capture_default_str();
  app.add_option("--oracle-max-d", guard_d, "brute-force guard: largest d")
      ->capture_default_str();
  app.add_option("--oracle-max-p", guard_p, "brute-force guard: largest p")
      ->capture_default_str();

  int n = 0, d = 0, p = 0, kappa = 0, nvars = 0;
  int max_n = 3, max_d = 3, max_p = 3;
  std::string method_eval = "all", method_j = "all", method_phi;
  std::string partition_j = "0", partition_jack, alpha;
  bool inject = false, empty_ledger = false;

  CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate I(n, d, p)");
  cmd_eval->add_option("--n", n, "number of variables")->required();
  cmd_eval->add_option("--d", d, "power of the squared-difference product")->required();
  cmd_eval->add_option("--p", p, "power of the product of variables")->required();
  cmd_eval->add_option("--method", method_eval, "perm | jack | rec | oracle | all")
      ->capture_default_str();

  CLI::App* cmd_phi = app.add_subcommand("phi", "polynomial factor of the closed form");
  cmd_phi->add_option("--n", n, "number of variables")->required();
  cmd_phi->add_option("--d", d, "power of the squared-difference product")->required();
  cmd_phi->add_option("--method", method_phi, "perm | det | jack")->required();

  CLI::App* cmd_j = app.add_subcommand("j", "evaluate J(n, kappa, m_lambda)");
  cmd_j->add_option("--n", n, "number of variables")->required();
  cmd_j->add_option("--kappa", kappa, "power of the difference product")->required();
  cmd_j->add_option("--partition", partition_j, "parts a,b,c (0 = constant 1)")
      ->capture_default_str();
  cmd_j->add_option("--method", method_j, "rec | oracle | all")->capture_default_str();

  CLI::App* cmd_jack = app.add_subcommand("jack", "Jack polynomial on the monomial basis");
  cmd_jack->add_option("--alpha", alpha, "positive rational parameter, e.g. 1/2")
      ->required();
  cmd_jack->add_option("--nvars", nvars, "number of variables")->required();
  cmd_jack->add_option("--partition", partition_jack, "parts a,b,c")->required();

  CLI::App* cmd_validate =
      app.add_subcommand("validate", "cross-validation grid and structure checks");
  cmd_validate->add_option("--max-n", max_n, "grid bound on n")->capture_default_str();
  cmd_validate->add_option("--max-d", max_d, "grid bound on d")->capture_default_str();
  cmd_validate->add_option("--max-p", max_p, "grid bound on p")->capture_default_str();
  cmd_validate->add_flag("--inject-disagreement", inject, "corrupt one golden fixture")
      ->group("");

  CLI::App* cmd_errata = app.add_subcommand("errata", "documented-discrepancy ledger");
  cmd_errata->add_flag("--empty-ledger", empty_ledger, "write a ledger with no entries")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : SELBERG_USAGE;
  }

  CtxPtr ctx(selberg_ctx_new());
  if (ctx == nullptr) {
    std::fprintf(stderr, "error: could not create a context\n");
    return SELBERG_INTERNAL;
  }
  if (!cache_dir.empty()) {
    if (int rc = selberg_set_cache_dir(ctx.get(), cache_dir.c_str()); rc != SELBERG_OK) {
      std::fprintf(stderr, "error: %s\n", selberg_last_error(ctx.get()));
      return rc;
    }
  }
  if (int rc = selberg_set_oracle_guard(ctx.get(), guard_n, guard_d, guard_p);
      rc != SELBERG_OK) {
    std::fprintf(stderr, "error: %s\n", selberg_last_error(ctx.get()));
    return rc;
  }
  if (int rc = selberg_set_threads(ctx.get(), threads); rc != SELBERG_OK) {
    std::fprintf(stderr, "error: %s\n", selberg_last_error(ctx.get()));
    return rc;
  }

  char* out = nullptr;
  if (cmd_eval->parsed()) {
    int rc = selberg_eval(ctx.get(), n, d, p, method_eval.c_str(), &out);
    return finish(ctx.get(), rc, JsonPtr(out), json_out, latex, render_eval);
  }
  if (cmd_phi->parsed()) {
    int rc = selberg_phi(ctx.get(), n, d, method_phi.c_str(), &out);
    return finish(ctx.get(), rc, JsonPtr(out), json_out, latex, render_phi);
  }
  if (cmd_j->parsed()) {
    int rc = selberg_eval_j(ctx.get(), n, kappa, partition_j.c_str(), method_j.c_str(),
                            &out);
    return finish(ctx.get(), rc, JsonPtr(out), json_out, latex, render_eval);
  }
  if (cmd_jack->parsed()) {
    int rc = selberg_jack_poly(ctx.get(), alpha.c_str(), nvars, partition_jack.c_str(),
                               &out);
    return finish(ctx.get(), rc, JsonPtr(out), json_out, latex, render_jack);
  }
  if (cmd_validate->parsed()) {
    int rc = selberg_validate(ctx.get(), max_n, max_d, max_p, inject ? 1 : 0, &out);
    return finish(ctx.get(), rc, JsonPtr(out), json_out, latex,
                  [](const json& j, bool) { render_validate(j); });
  }
  if (cmd_errata->parsed()) {
    int rc = selberg_errata(ctx.get(), empty_ledger ? 0 : 1, &out);
    return finish(ctx.get(), rc, JsonPtr(out), json_out, latex,
                  [](const json& j, bool) { render_errata(j); });
  }
  std::fprintf(stderr, "error: no command\n");
  return SELBERG_USAGE;
}
