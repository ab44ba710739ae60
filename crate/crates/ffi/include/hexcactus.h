#ifndef HEXCACTUS_H
#define HEXCACTUS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HcStatus {
  HC_STATUS_OK = 0,
  HC_STATUS_NULL_POINTER = 1,
  HC_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed input: probabilities, sequences, out-of-range arguments.
   */
  HC_STATUS_INVALID_INPUT = 3,
  /**
   * A computation limit was hit or the computation is undefined.
   */
  HC_STATUS_COMPUTATION = 4,
  HC_STATUS_PANIC = 5,
} HcStatus;

typedef enum HcAttachment {
  HC_ATTACHMENT_ORTHO = 0,
  HC_ATTACHMENT_META = 1,
  HC_ATTACHMENT_PARA = 2,
} HcAttachment;

typedef enum HcKind {
  HC_KIND_HOSOYA = 0,
  HC_KIND_MERRIFIELD_SIMMONS = 1,
} HcKind;

typedef enum HcEngine {
  HC_ENGINE_CHAIN = 0,
  HC_ENGINE_BRUTE = 1,
  HC_ENGINE_RECURSIVE = 2,
} HcEngine;

/**
 * Opaque probability triple.
 */
typedef struct HcProbs HcProbs;

/**
 * Opaque list of exact rational coefficients.
 */
typedef struct HcSeries HcSeries;

/**
 * Monte Carlo summary. Values are rounded to double precision; for very
 * long chains `mean` may be infinite, in which case use the CLI.
 */
typedef struct HcMcEstimate {
  double mean;
  double std_dev;
  double std_err;
  uint64_t trials;
  uint32_t n;
} HcMcEstimate;

typedef struct HcAsymptotic {
  double growth_rate;
  double amplitude;
  double pole_approx;
  double printed;
  double rel_err_pole;
  double rel_err_printed;
} HcAsymptotic;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread, or an empty
 * string. The pointer stays valid until the next `hc_*` call on this thread.
 */
const char *hc_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *hc_version(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void hc_string_free(char *s);

/**
 * Parses `"a,b,c"` (exact rationals or terminating decimals summing to 1).
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be writable.
 */
enum HcStatus hc_probs_parse(const char *text, struct HcProbs **out);

/**
 * Degenerate triple selecting one attachment with probability one.
 *
 * # Safety
 * `out` must be writable.
 */
enum HcStatus hc_probs_pure(enum HcAttachment kind, struct HcProbs **out);

/**
 * # Safety
 * `p` must be NULL or a handle from `hc_probs_*`, not yet freed.
 */
void hc_probs_free(struct HcProbs *p);

/**
 * Exact index of the chain with `n` hexagons and attachment string `seq`
 * over `{o, m, p}`, as a decimal string.
 *
 * # Safety
 * `seq` must be a valid NUL-terminated string; `out` must be writable.
 */
enum HcStatus hc_count(const char *seq,
                       uint32_t n,
                       enum HcKind kind,
                       enum HcEngine engine,
                       char **out);

/**
 * Expected index of `R_n` as an exact rational string.
 *
 * # Safety
 * `probs` must be a live handle; `out` must be writable.
 */
enum HcStatus hc_expectation(const struct HcProbs *probs, uint32_t n, enum HcKind kind, char **out);

/**
 * First `terms` coefficients of the closed-form generating function.
 *
 * # Safety
 * `probs` must be a live handle; `out` must be writable.
 */
enum HcStatus hc_series_new(const struct HcProbs *probs,
                            enum HcKind kind,
                            size_t terms,
                            struct HcSeries **out);

/**
 * First `terms` coefficients of the published pure-chain generating
 * function (constant term 2 for independent sets).
 *
 * # Safety
 * `out` must be writable.
 */
enum HcStatus hc_series_published(enum HcAttachment case_,
                                  enum HcKind kind,
                                  size_t terms,
                                  struct HcSeries **out);

/**
 * # Safety
 * `s` must be NULL or a live series handle.
 */
size_t hc_series_len(const struct HcSeries *s);

/**
 * Coefficient `index` as a string borrowed from the handle, or NULL when
 * out of range. Valid until the handle is freed.
 *
 * # Safety
 * `s` must be NULL or a live series handle.
 */
const char *hc_series_get(const struct HcSeries *s, size_t index);

/**
 * # Safety
 * `s` must be NULL or a live series handle.
 */
void hc_series_free(struct HcSeries *s);

/**
 * DOT text of the chain, or of an auxiliary graph when `aux_variant` is 0
 * (prime), 1 (tilde) or 2 (hat); pass -1 for the bare chain.
 *
 * # Safety
 * `seq` must be a valid NUL-terminated string; `out` must be writable.
 */
enum HcStatus hc_graph_dot(const char *seq,
                           uint32_t n,
                           int32_t aux_variant,
                           enum HcAttachment pendant,
                           char **out);

/**
 * # Safety
 * `probs` must be a live handle; `out` must be writable.
 */
enum HcStatus hc_monte_carlo(const struct HcProbs *probs,
                             uint32_t n,
                             uint64_t trials,
                             uint64_t seed,
                             enum HcKind kind,
                             struct HcMcEstimate *out);

/**
 * # Safety
 * `probs` must be a live handle; `out` must be writable.
 */
enum HcStatus hc_asymptotic(const struct HcProbs *probs,
                            uint32_t n,
                            enum HcKind kind,
                            struct HcAsymptotic *out);

/**
 * Runs the internal cross-check suite; `*passed` is set to whether every
 * check succeeded.
 *
 * # Safety
 * `passed` must be writable.
 */
enum HcStatus hc_verify(bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HEXCACTUS_H */
