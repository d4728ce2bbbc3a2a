#ifndef SIMRANK_H
#define SIMRANK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum SimrankStatus {
  SIMRANK_STATUS_OK = 0,
  SIMRANK_STATUS_NULL_ARGUMENT = 1,
  SIMRANK_STATUS_INVALID_UTF8 = 2,
  SIMRANK_STATUS_PARSE_ERROR = 3,
  SIMRANK_STATUS_MISSING_COLUMN = 4,
  SIMRANK_STATUS_DUPLICATE_PLAYER = 5,
  SIMRANK_STATUS_EMPTY_DATASET = 6,
  SIMRANK_STATUS_INVALID_SCHEMA = 7,
  SIMRANK_STATUS_INVALID_DATA = 8,
  SIMRANK_STATUS_UNKNOWN_CRITERION = 9,
  SIMRANK_STATUS_UNKNOWN_PLAYER = 10,
  SIMRANK_STATUS_INVALID_METRIC = 11,
  SIMRANK_STATUS_OUT_OF_RANGE = 12,
  SIMRANK_STATUS_DIMENSION_MISMATCH = 13,
  SIMRANK_STATUS_CONSTANT_COLUMN = 14,
  SIMRANK_STATUS_INSUFFICIENT_SAMPLES = 15,
  SIMRANK_STATUS_IO = 16,
  SIMRANK_STATUS_PANIC = 99,
} SimrankStatus;

// A validated dataset together with its normalized matrix.
typedef struct SimrankDataset SimrankDataset;

// A similarity ranking; player names are owned by the handle.
typedef struct SimrankRanking SimrankRanking;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a success.
// The pointer stays valid until the next simrank call on the same thread.
const char *simrank_last_error_message(void);

// Library version as a static string.
const char *simrank_version(void);

// Loads the bundled reference dataset.
//
// # Safety
// `out` must be a valid pointer to writable storage for one handle.
enum SimrankStatus simrank_dataset_reference(struct SimrankDataset **out);

// Loads a dataset from CSV text. `schema_json` may be null to use the
// reference schema.
//
// # Safety
// `csv` and a non-null `schema_json` must be NUL-terminated strings; `out`
// must be valid for one write.
enum SimrankStatus simrank_dataset_from_csv(const char *csv,
                                            const char *schema_json,
                                            struct SimrankDataset **out);

// Releases a dataset handle. Null is ignored.
//
// # Safety
// `ds` must come from a simrank constructor and not be freed twice.
void simrank_dataset_free(struct SimrankDataset *ds);

// Number of players, or 0 for a null handle.
//
// # Safety
// `ds` must be null or a live handle.
size_t simrank_dataset_player_count(const struct SimrankDataset *ds);

// Number of included criteria, or 0 for a null handle.
//
// # Safety
// `ds` must be null or a live handle.
size_t simrank_dataset_criterion_count(const struct SimrankDataset *ds);

// Normalized value of one cell, addressed by player and criterion index.
//
// # Safety
// `ds` must be a live handle and `out` valid for one write.
enum SimrankStatus simrank_dataset_normalized_value(const struct SimrankDataset *ds,
                                                    size_t player,
                                                    size_t criterion,
                                                    double *out);

// Full similarity ranking to `target` under the L^p distance.
//
// # Safety
// `ds` must be a live handle, `target` a NUL-terminated string and `out`
// valid for one write.
enum SimrankStatus simrank_rank(const struct SimrankDataset *ds,
                                const char *target,
                                double p,
                                struct SimrankRanking **out);

// The `k` players nearest to `target`.
//
// # Safety
// Same requirements as [`simrank_rank`].
enum SimrankStatus simrank_nearest(const struct SimrankDataset *ds,
                                   const char *target,
                                   size_t k,
                                   double p,
                                   struct SimrankRanking **out);

// Number of entries, or 0 for a null handle.
//
// # Safety
// `r` must be null or a live ranking handle.
size_t simrank_ranking_len(const struct SimrankRanking *r);

// Rank and distance of entry `index`. Either output pointer may be null.
//
// # Safety
// `r` must be a live ranking handle; non-null outputs must be writable.
enum SimrankStatus simrank_ranking_entry(const struct SimrankRanking *r,
                                         size_t index,
                                         size_t *rank,
                                         double *distance);

// Player name of entry `index`, owned by the ranking; null when out of range.
//
// # Safety
// `r` must be null or a live ranking handle.
const char *simrank_ranking_player(const struct SimrankRanking *r, size_t index);

// Releases a ranking handle. Null is ignored.
//
// # Safety
// `r` must come from a simrank ranking call and not be freed twice.
void simrank_ranking_free(struct SimrankRanking *r);

// L^p distance between two vectors of length `len`.
//
// # Safety
// `a` and `b` must point to `len` readable doubles; `out` must be writable.
enum SimrankStatus simrank_minkowski(const double *a,
                                     const double *b,
                                     size_t len,
                                     double p,
                                     double *out);

// Sample Pearson correlation of two series of length `len`.
//
// # Safety
// `xs` and `ys` must point to `len` readable doubles; `out` must be writable.
enum SimrankStatus simrank_pearson(const double *xs, const double *ys, size_t len, double *out);

// Two-tailed p-value of a correlation `rho` over `n` samples.
//
// # Safety
// `out` must be writable.
enum SimrankStatus simrank_two_tailed_p_value(double rho, size_t n, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SIMRANK_H */
