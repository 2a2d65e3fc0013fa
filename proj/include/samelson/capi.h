#ifndef SAMELSON_CAPI_H
#define SAMELSON_CAPI_H

/* C interface to the Samelson-product calculator. All commands render a
 * report document (JSON or markdown, per the "format" option) into a
 * heap-allocated string owned by the caller; release it with
 * sam_string_free. Return codes: 0 success, 1 computation failure or
 * fixture mismatch under strict mode, 2 usage error, 3 internal error.
 * On nonzero returns sam_last_error describes the problem (for code 1 the
 * output document is still produced when possible). */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sam_ctx sam_ctx;

sam_ctx* sam_ctx_new(void);
void sam_ctx_free(sam_ctx* ctx);

/* Keys: "seed" (unsigned integer), "fixtures" (directory path), "format"
 * ("json" or "markdown"), "strict" ("0"/"1"), "dedicated_b3" ("0"/"1"),
 * "trials" (positive integer). Returns 0 or 2 on a bad key/value. */
int sam_set_option(sam_ctx* ctx, const char* key, const char* value);

/* Message for the most recent failing call on this context; valid until
 * the next call. Never NULL. */
const char* sam_last_error(const sam_ctx* ctx);

/* Product decomposition of the group at an odd prime. family is "SU",
 * "Sp", "SpinOdd", "SpinEven", "G2", "F4", "E6", "E7" or "E8"; n is the
 * family parameter (ignored for exceptional groups). */
int sam_decompose(sam_ctx* ctx, const char* family, int n, long p, char** out);

/* Order bound for the universal Samelson product; with_trace attaches the
 * per-cell provenance entries. */
int sam_order(sam_ctx* ctx, const char* family, int n, long p, int with_trace,
              char** out);

/* Homotopy-group lookup. space is "S:<dim>" or "B:<low>:<high>". */
int sam_pi(sam_ctx* ctx, const char* space, int degree, long p, char** out);

/* Table regeneration. which is "p-regular" (primes up to max_p), "su"
 * (primes in [p_lo, p_hi]), "exceptional", or "diff-b3" (recompute all
 * three under both bundle-table conventions and report changed rows).
 * Pass 0 for defaults (max_p 101, p range 7..31). */
int sam_table(sam_ctx* ctx, const char* which, long max_p, long p_lo, long p_hi,
              char** out);

/* Verification suites. suite is "identities", "oracle", "expansion",
 * "hockey", "binom", "nilvanish", or NULL/"" for all. n_max bounds the
 * exhaustive hockey sweep (0 = 200); n pins the expansion suite to one
 * exponent (0 = full sweep). */
int sam_verify(sam_ctx* ctx, const char* suite, long n_max, long n, char** out);

void sam_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* SAMELSON_CAPI_H */
