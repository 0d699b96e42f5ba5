#ifndef MAXREP_H
#define MAXREP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MaxrepStatus {
  MAXREP_STATUS_OK = 0,
  MAXREP_STATUS_NULL_POINTER = 1,
  /**
   * Text is not valid UTF-8 or has a character outside `a-z`, or the
   * operation needs a non-empty word.
   */
  MAXREP_STATUS_INVALID_WORD = 2,
  /**
   * A position, cut or interval lies outside the word.
   */
  MAXREP_STATUS_OUT_OF_RANGE = 3,
  MAXREP_STATUS_INVALID_ARGUMENT = 4,
  /**
   * The output buffer is too small; the required size was still written.
   */
  MAXREP_STATUS_BUFFER_TOO_SMALL = 5,
  /**
   * A property that always holds failed. Indicates a bug.
   */
  MAXREP_STATUS_INVARIANT_VIOLATION = 6,
  /**
   * A panic was caught at the boundary.
   */
  MAXREP_STATUS_INTERNAL = 7,
} MaxrepStatus;

typedef enum MaxrepOrdering {
  MAXREP_ORDERING_FORWARD = 0,
  MAXREP_ORDERING_REVERSE = 1,
} MaxrepOrdering;

/**
 * Opaque list of runs.
 */
typedef struct MaxrepRuns MaxrepRuns;

/**
 * Opaque word handle.
 */
typedef struct MaxrepWord MaxrepWord;

/**
 * A maximal repetition `[start..end]` with smallest period `period`,
 * 0-based and inclusive.
 */
typedef struct MaxrepRun {
  size_t start;
  size_t end;
  size_t period;
} MaxrepRun;

/**
 * A run together with its assigned position `k` and the ordering under
 * which `k` starts the greatest proper suffix of the run.
 */
typedef struct MaxrepAssignment {
  struct MaxrepRun run;
  size_t k;
  enum MaxrepOrdering ordering;
} MaxrepAssignment;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread, or NULL if
 * none. Valid until the next failing call on the same thread.
 */
const char *maxrep_last_error_message(void);

/**
 * Parses a NUL-terminated word over `a-z` into `*out`.
 *
 * # Safety
 * `text` must be NULL or a valid NUL-terminated string; `out` must be NULL
 * or writable.
 */
enum MaxrepStatus maxrep_word_new(const char *text, struct MaxrepWord **out);

/**
 * # Safety
 * `w` must be NULL or a handle from `maxrep_word_new` not yet freed.
 */
void maxrep_word_free(struct MaxrepWord *w);

/**
 * Length of the word, 0 for NULL.
 *
 * # Safety
 * `w` must be NULL or a live word handle.
 */
size_t maxrep_word_len(const struct MaxrepWord *w);

/**
 * Computes all runs of `w`, sorted by start then end.
 *
 * # Safety
 * `w` must be NULL or a live word handle; `out` must be NULL or writable.
 */
enum MaxrepStatus maxrep_runs_new(const struct MaxrepWord *w, struct MaxrepRuns **out);

/**
 * # Safety
 * `runs` must be NULL or a live run-list handle.
 */
size_t maxrep_runs_len(const struct MaxrepRuns *runs);

/**
 * # Safety
 * `runs` must be NULL or a live run-list handle; `out` must be NULL or
 * writable.
 */
enum MaxrepStatus maxrep_runs_get(const struct MaxrepRuns *runs,
                                  size_t index,
                                  struct MaxrepRun *out);

/**
 * # Safety
 * `runs` must be NULL or a handle from `maxrep_runs_new` not yet freed.
 */
void maxrep_runs_free(struct MaxrepRuns *runs);

/**
 * Smallest period of the whole word.
 *
 * # Safety
 * `w` must be NULL or a live word handle; `out` must be NULL or writable.
 */
enum MaxrepStatus maxrep_smallest_period(const struct MaxrepWord *w, size_t *out);

/**
 * Local period at `cut`, where `0 <= cut <= len`.
 *
 * # Safety
 * `w` must be NULL or a live word handle; `out` must be NULL or writable.
 */
enum MaxrepStatus maxrep_local_period(const struct MaxrepWord *w, size_t cut, size_t *out);

/**
 * Number of Lyndon roots lying inside `[start..end]`.
 *
 * # Safety
 * `w` must be NULL or a live word handle; `out` must be NULL or writable.
 */
enum MaxrepStatus maxrep_count_lroots_in(const struct MaxrepWord *w,
                                         size_t start,
                                         size_t end,
                                         size_t *out);

/**
 * Writes the assignment of every run into `buf` (capacity `cap`) and the
 * number of runs into `*count`. With a short buffer nothing is written to
 * `buf`, `*count` still holds the required size and `BufferTooSmall` is
 * returned, so `cap = 0` queries the size.
 *
 * # Safety
 * `w` must be NULL or a live word handle; `buf` must be NULL or point to
 * `cap` writable elements; `count` must be NULL or writable.
 */
enum MaxrepStatus maxrep_assignments(const struct MaxrepWord *w,
                                     struct MaxrepAssignment *buf,
                                     size_t cap,
                                     size_t *count);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MAXREP_H */
