/* C interface to the Selberg-like integral evaluator.
 *
 * All evaluation results are returned as JSON strings under the schema
 * "selberg-report-v1"; rationals appear as {"num": "...", "den": "..."}
 * decimal strings.  Returned strings are heap-allocated and must be released
 * with selberg_string_free.  Every call returns one of the SELBERG_* codes;
 * on any nonzero code selberg_last_error holds a human-readable message.
 */
#ifndef SELBERG_H
#define SELBERG_H

#ifdef __cplusplus
extern "C" {
#endif

#define SELBERG_OK 0       /* success, and (for eval/validate) agreement   */
#define SELBERG_USAGE 1    /* bad arguments or malformed input             */
#define SELBERG_DISAGREE 2 /* pipelines or self-checks disagree; JSON set  */
#define SELBERG_RESOURCE 3 /* refused: beyond the configured oracle guard  */
#define SELBERG_INTERNAL 4 /* invariant violation inside the library       */

typedef struct selberg_ctx selberg_ctx;

/* A context owns all caches (Jack polynomials, expansions, memo tables) and
 * the configuration.  Contexts are independent; one context must not be used
 * from two threads at once. */
selberg_ctx* selberg_ctx_new(void);
void selberg_ctx_free(selberg_ctx* ctx);

/* Message for the most recent failing call on this context; the empty string
 * after a success.  Owned by the context; valid until the next call. */
const char* selberg_last_error(const selberg_ctx* ctx);

/* Where the persistent Jack-polynomial cache lives.  Call before the first
 * evaluation; the default honors SELBERG_CACHE_DIR, then the platform cache
 * directory. */
int selberg_set_cache_dir(selberg_ctx* ctx, const char* path);

/* Size limits for the brute-force integrator (defaults n<=4, d<=4, p<=6). */
int selberg_set_oracle_guard(selberg_ctx* ctx, int max_n, int max_d, int max_p);

/* Worker threads for the permutation-sum pipeline; 0 picks from hardware. */
int selberg_set_threads(selberg_ctx* ctx, int threads);

void selberg_string_free(char* s);

/* I(n, d, p) by the requested method: "perm", "jack", "rec", "oracle", or
 * "all".  "all" runs every applicable pipeline and cross-checks; exact
 * disagreement returns SELBERG_DISAGREE with the report still written. */
int selberg_eval(selberg_ctx* ctx, int n, int d, int p, const char* method,
                 char** out_json);

/* J(n, kappa, m_lambda) for the monomial symmetric polynomial of the given
 * partition ("a,b,c"; "0" or "" for the constant 1).  method: "rec",
 * "oracle", or "all". */
int selberg_eval_j(selberg_ctx* ctx, int n, int kappa, const char* partition,
                   const char* method, char** out_json);

/* The polynomial factor of the closed form: method "perm" (even d), "det"
 * (d = 2 only), or "jack". */
int selberg_phi(selberg_ctx* ctx, int n, int d, const char* method, char** out_json);

/* Jack polynomial P_lambda^(alpha) in nvars variables on the monomial basis;
 * alpha is a positive rational "num/den" or "num". */
int selberg_jack_poly(selberg_ctx* ctx, const char* alpha, int nvars,
                      const char* partition, char** out_json);

/* Cross-validation grid and exhaustive structure checks up to the given
 * sizes.  Any failing check returns SELBERG_DISAGREE with the report
 * written.  inject_disagreement deliberately corrupts one golden fixture to
 * exercise the failure path. */
int selberg_validate(selberg_ctx* ctx, int max_n, int max_d, int max_p,
                     int inject_disagreement, char** out_json);

/* The documented-discrepancy ledger with live-computed fixture values.
 * include_entries = 0 writes an empty ledger (self-test hook). */
int selberg_errata(selberg_ctx* ctx, int include_entries, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* SELBERG_H */
