#include "selberg/selberg.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "errata.hpp"
#include "error.hpp"
#include "report.hpp"
#include "workspace.hpp"

struct selberg_ctx {
  selberg::Workspace ws;
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int write_out(char** out_json, const std::string& s) {
  if (out_json == nullptr) return SELBERG_OK;
  *out_json = dup_string(s);
  return *out_json != nullptr ? SELBERG_OK : SELBERG_RESOURCE;
}

// Translates the library's exception taxonomy into status codes; every API
// entry point runs inside this.
template <typename Fn>
int guarded(selberg_ctx* ctx, Fn&& fn) {
  if (ctx == nullptr) return SELBERG_USAGE;
  ctx->last_error.clear();
  try {
    return fn();
  } catch (const selberg::Error& e) {
    ctx->last_error = e.what();
    return static_cast<int>(e.status());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return SELBERG_RESOURCE;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return SELBERG_INTERNAL;
  } catch (...) {
    ctx->last_error = "unknown failure";
    return SELBERG_INTERNAL;
  }
}

std::string require_string(const char* value, const char* what) {
  selberg::check_usage(value != nullptr, std::string(what) + " must not be null");
  return std::string(value);
}

}  // namespace

extern "C" {

selberg_ctx* selberg_ctx_new(void) {
  try {
    return new selberg_ctx();
  } catch (...) {
    return nullptr;
  }
}

void selberg_ctx_free(selberg_ctx* ctx) { delete ctx; }

const char* selberg_last_error(const selberg_ctx* ctx) {
  return ctx == nullptr ? "null context" : ctx->last_error.c_str();
}

int selberg_set_cache_dir(selberg_ctx* ctx, const char* path) {
  return guarded(ctx, [&] {
    ctx->ws.cache_dir = require_string(path, "cache directory");
    return SELBERG_OK;
  });
}

int selberg_set_oracle_guard(selberg_ctx* ctx, int max_n, int max_d, int max_p) {
  return guarded(ctx, [&] {
    selberg::check_usage(max_n >= 0 && max_d >= 0 && max_p >= 0,
                         "guard limits must be nonnegative");
    ctx->ws.guard.max_n = max_n;
    ctx->ws.guard.max_d = max_d;
    ctx->ws.guard.max_p = max_p;
    return SELBERG_OK;
  });
}

int selberg_set_threads(selberg_ctx* ctx, int threads) {
  return guarded(ctx, [&] {
    selberg::check_usage(threads >= 0, "thread count must be nonnegative");
    ctx->ws.threads = threads;
    return SELBERG_OK;
  });
}

void selberg_string_free(char* s) { std::free(s); }

int selberg_eval(selberg_ctx* ctx, int n, int d, int p, const char* method,
                 char** out_json) {
  return guarded(ctx, [&] {
    std::string m = require_string(method, "method");
    ctx->ws.ensure_jack_cache_loaded();
    selberg::EvaluationReport report = selberg::run_eval(n, d, p, m, ctx->ws);
    ctx->ws.save_jack_cache_if_dirty();
    int rc = write_out(out_json, selberg::eval_report_to_json(report));
    if (rc != SELBERG_OK) return rc;
    if (!report.agreement) {
      ctx->last_error = "methods disagree: " + report.first_disagreement.first +
                        " vs " + report.first_disagreement.second;
      return SELBERG_DISAGREE;
    }
    return SELBERG_OK;
  });
}

int selberg_eval_j(selberg_ctx* ctx, int n, int kappa, const char* partition,
                   const char* method, char** out_json) {
  return guarded(ctx, [&] {
    selberg::Partition lambda =
        selberg::Partition::parse(require_string(partition, "partition"));
    std::string m = require_string(method, "method");
    ctx->ws.ensure_jack_cache_loaded();
    selberg::EvaluationReport report = selberg::run_j(n, kappa, lambda, m, ctx->ws);
    ctx->ws.save_jack_cache_if_dirty();
    int rc = write_out(out_json, selberg::eval_report_to_json(report));
    if (rc != SELBERG_OK) return rc;
    if (!report.agreement) {
      ctx->last_error = "methods disagree: " + report.first_disagreement.first +
                        " vs " + report.first_disagreement.second;
      return SELBERG_DISAGREE;
    }
    return SELBERG_OK;
  });
}

int selberg_phi(selberg_ctx* ctx, int n, int d, const char* method, char** out_json) {
  return guarded(ctx, [&] {
    std::string m = require_string(method, "method");
    ctx->ws.ensure_jack_cache_loaded();
    selberg::PhiReport report = selberg::run_phi(n, d, m, ctx->ws);
    ctx->ws.save_jack_cache_if_dirty();
    return write_out(out_json, selberg::phi_report_to_json(report));
  });
}

int selberg_jack_poly(selberg_ctx* ctx, const char* alpha, int nvars,
                      const char* partition, char** out_json) {
  return guarded(ctx, [&] {
    selberg::Rational a =
        selberg::rational_from_string(require_string(alpha, "alpha"));
    selberg::Partition lambda =
        selberg::Partition::parse(require_string(partition, "partition"));
    ctx->ws.ensure_jack_cache_loaded();
    selberg::JackReport report = selberg::run_jack(a, nvars, lambda, ctx->ws);
    ctx->ws.save_jack_cache_if_dirty();
    return write_out(out_json, selberg::jack_report_to_json(report));
  });
}

int selberg_validate(selberg_ctx* ctx, int max_n, int max_d, int max_p,
                     int inject_disagreement, char** out_json) {
  return guarded(ctx, [&] {
    ctx->ws.ensure_jack_cache_loaded();
    selberg::ValidationReport report =
        selberg::run_validate(max_n, max_d, max_p, inject_disagreement != 0, ctx->ws);
    ctx->ws.save_jack_cache_if_dirty();
    int rc = write_out(out_json, selberg::validation_report_to_json(report));
    if (rc != SELBERG_OK) return rc;
    if (!report.all_passed) {
      for (const selberg::ValidationCheck& check : report.checks) {
        if (!check.passed) {
          ctx->last_error = "validation failed: " + check.name + " (" + check.detail + ")";
          break;
        }
      }
      return SELBERG_DISAGREE;
    }
    return SELBERG_OK;
  });
}

int selberg_errata(selberg_ctx* ctx, int include_entries, char** out_json) {
  return guarded(ctx, [&] {
    std::vector<selberg::ErrataEntry> entries;
    if (include_entries != 0) {
      ctx->ws.ensure_jack_cache_loaded();
      entries = selberg::errata_entries(ctx->ws);
      ctx->ws.save_jack_cache_if_dirty();
    }
    return write_out(out_json, selberg::errata_to_json(entries));
  });
}

}  // extern "C"
