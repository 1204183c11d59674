#ifndef LCSGC_H
#define LCSGC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible call.
 */
typedef enum LcsgcStatus {
  LcsgcOk = 0,
  /**
   * A pointer argument was null or a string was not valid UTF-8.
   */
  LcsgcBadArgument = 1,
  /**
   * The instance JSON or its fields failed validation.
   */
  LcsgcBadInstance = 2,
  /**
   * The algorithm does not apply to the instance's variant.
   */
  LcsgcUnsupportedAlgorithm = 3,
  /**
   * The instance exceeds the oracle size cap.
   */
  LcsgcCapExceeded = 4,
  /**
   * Any other solver error.
   */
  LcsgcSolverError = 5,
} LcsgcStatus;

/**
 * An opaque, validated problem instance.
 */
typedef struct LcsgcInstance LcsgcInstance;

/**
 * An opaque solve outcome: a length and an optional witness.
 */
typedef struct LcsgcResult LcsgcResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent error on this thread. The pointer stays valid
 * until the next failing call on the same thread; do not free it.
 */
const char *lcsgc_last_error_message(void);

/**
 * Parses and validates an instance from JSON. On success writes a handle to
 * `out`; release it with `lcsgc_instance_free`.
 *
 * # Safety
 * `json` must be a valid nul-terminated string and `out` a valid pointer.
 */
enum LcsgcStatus lcsgc_instance_from_json(const char *json, struct LcsgcInstance **out);

/**
 * Releases an instance handle. Null is a no-op.
 *
 * # Safety
 * `inst` must come from `lcsgc_instance_from_json` and not be freed twice.
 */
void lcsgc_instance_free(struct LcsgcInstance *inst);

/**
 * Solves an instance. `algorithm` is one of "auto", "layered", "segtree",
 * "deque", "rmq", "naive", "blocked" (null means "auto"). On success writes
 * a result handle to `out`; release it with `lcsgc_result_free`.
 *
 * # Safety
 * `inst` and `out` must be valid; `algorithm` null or nul-terminated.
 */
enum LcsgcStatus lcsgc_solve(const struct LcsgcInstance *inst,
                             const char *algorithm,
                             bool want_witness,
                             struct LcsgcResult **out);

/**
 * Solves an instance exhaustively with the reference oracle; `cap` of 0
 * means the default size cap.
 *
 * # Safety
 * As `lcsgc_solve`.
 */
enum LcsgcStatus lcsgc_oracle_solve(const struct LcsgcInstance *inst,
                                    uintptr_t cap,
                                    struct LcsgcResult **out);

/**
 * Releases a result handle. Null is a no-op.
 *
 * # Safety
 * `res` must come from a solve call and not be freed twice.
 */
void lcsgc_result_free(struct LcsgcResult *res);

/**
 * Answer length of a result; 0 for a null handle.
 *
 * # Safety
 * `res` must be a valid result handle or null.
 */
uintptr_t lcsgc_result_length(const struct LcsgcResult *res);

/**
 * 1 if the result carries a witness, else 0.
 *
 * # Safety
 * `res` must be a valid result handle or null.
 */
int lcsgc_result_has_witness(const struct LcsgcResult *res);

/**
 * Copies the witness into caller buffers of capacity `cap` entries each:
 * letters into `symbols`, 1-based positions into `v_positions` and
 * `w_positions`. Null buffers are skipped. Returns the number of entries
 * written (0 when there is no witness or `cap` is too small).
 *
 * # Safety
 * Non-null buffers must have at least `cap` writable entries.
 */
uintptr_t lcsgc_result_witness(const struct LcsgcResult *res,
                               uint32_t *symbols,
                               uintptr_t *v_positions,
                               uintptr_t *w_positions,
                               uintptr_t cap);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* LCSGC_H */
