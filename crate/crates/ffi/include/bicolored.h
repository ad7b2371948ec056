#ifndef BICOLORED_H
#define BICOLORED_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BicoloredStatus {
  BICOLORED_STATUS_OK = 0,
  BICOLORED_STATUS_NULL_POINTER = 1,
  BICOLORED_STATUS_INVALID_ARGUMENT = 2,
  BICOLORED_STATUS_CAP_EXCEEDED = 3,
  BICOLORED_STATUS_PARSE_ERROR = 4,
  BICOLORED_STATUS_INTERNAL = 5,
} BicoloredStatus;

/**
 * Resource limits plus the last error message.
 */
typedef struct BicoloredContext BicoloredContext;

/**
 * A computed grid of bound ratios.
 */
typedef struct BicoloredRatioTable BicoloredRatioTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a context with default limits. Free it with [`bicolored_context_free`].
 */
struct BicoloredContext *bicolored_context_new(void);

/**
 * # Safety
 * `ctx` must come from [`bicolored_context_new`] and not be used afterwards. Null is ignored.
 */
void bicolored_context_free(struct BicoloredContext *ctx);

/**
 * The message for the last failed call, or an empty string. Valid until the next call
 * on `ctx`; null if `ctx` is null.
 *
 * # Safety
 * `ctx` must be a live context or null.
 */
const char *bicolored_last_error(const struct BicoloredContext *ctx);

/**
 * # Safety
 * `ctx` must be a live context.
 */
enum BicoloredStatus bicolored_context_set_max_degree(struct BicoloredContext *ctx,
                                                      size_t max_degree);

/**
 * Largest `p*q` for the subset census, at most 31.
 *
 * # Safety
 * `ctx` must be a live context.
 */
enum BicoloredStatus bicolored_context_set_max_pq(struct BicoloredContext *ctx, size_t max_pq);

/**
 * `|B_u(p,q)|` as a decimal integer string.
 *
 * # Safety
 * `ctx` must be a live context and `out` a valid pointer.
 */
enum BicoloredStatus bicolored_count(struct BicoloredContext *ctx, size_t p, size_t q, char **out);

/**
 * The character upper bound, exactly (`a+b*sqrt2`) and rounded to `places` decimals.
 * Either output pointer may be null to skip it.
 *
 * # Safety
 * `ctx` must be a live context; non-null outputs must be valid.
 */
enum BicoloredStatus bicolored_theorem_bound(struct BicoloredContext *ctx,
                                             size_t p,
                                             size_t q,
                                             uint32_t places,
                                             char **exact_out,
                                             char **decimal_out);

/**
 * The binomial lower and upper bounds as exact rationals (`num/den` or an integer).
 *
 * # Safety
 * `ctx` must be a live context and both outputs valid.
 */
enum BicoloredStatus bicolored_ao_bounds(struct BicoloredContext *ctx,
                                         size_t p,
                                         size_t q,
                                         char **lower_out,
                                         char **upper_out);

/**
 * The free-orbit fraction from the census. Fails with `CapExceeded` beyond the census cap.
 *
 * # Safety
 * `ctx` must be a live context and `out` valid.
 */
enum BicoloredStatus bicolored_free_fraction(struct BicoloredContext *ctx,
                                             size_t p,
                                             size_t q,
                                             char **out);

/**
 * The lower bound for the free-orbit fraction, clamped at 0.
 *
 * # Safety
 * `ctx` must be a live context and `out` valid.
 */
enum BicoloredStatus bicolored_free_fraction_lower_bound(struct BicoloredContext *ctx,
                                                         size_t p,
                                                         size_t q,
                                                         char **out);

/**
 * Computes the ratio grid for `p_values × k_values`. Free with [`bicolored_ratio_table_free`].
 *
 * # Safety
 * `ctx` must be a live context, the arrays must hold `n_p` and `n_k` elements, and `out`
 * must be valid.
 */
enum BicoloredStatus bicolored_ratio_table_new(struct BicoloredContext *ctx,
                                               const size_t *p_values,
                                               size_t n_p,
                                               const size_t *k_values,
                                               size_t n_k,
                                               uint32_t places,
                                               struct BicoloredRatioTable **out);

/**
 * # Safety
 * `table` must come from [`bicolored_ratio_table_new`] or be null.
 */
void bicolored_ratio_table_free(struct BicoloredRatioTable *table);

/**
 * # Safety
 * `table` must be a live table or null (which gives 0).
 */
size_t bicolored_ratio_table_rows(const struct BicoloredRatioTable *table);

/**
 * # Safety
 * `table` must be a live table or null (which gives 0).
 */
size_t bicolored_ratio_table_cols(const struct BicoloredRatioTable *table);

/**
 * The rounded decimal at (`row`, `col`).
 *
 * # Safety
 * `table` must be a live table and `out` valid.
 */
enum BicoloredStatus bicolored_ratio_table_decimal(const struct BicoloredRatioTable *table,
                                                   size_t row,
                                                   size_t col,
                                                   char **out);

/**
 * The exact value at (`row`, `col`) as `a+b*sqrt2`.
 *
 * # Safety
 * `table` must be a live table and `out` valid.
 */
enum BicoloredStatus bicolored_ratio_table_exact(const struct BicoloredRatioTable *table,
                                                 size_t row,
                                                 size_t col,
                                                 char **out);

/**
 * Runs one property suite (`characters`, `cycleform`, `bounds`, `asymptotics`) or `all`.
 * Sets `*all_passed` to 1 if every property held, else 0.
 *
 * # Safety
 * `ctx` must be a live context, `suite` a NUL-terminated string and `all_passed` valid.
 */
enum BicoloredStatus bicolored_verify(struct BicoloredContext *ctx,
                                      const char *suite,
                                      uint64_t seed,
                                      int32_t *all_passed);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void bicolored_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BICOLORED_H */
