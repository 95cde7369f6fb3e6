#ifndef QQCORR_H
#define QQCORR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define QQ_MEASURE_NEGATIVITY 1

#define QQ_MEASURE_MIN 2

#define QQ_MEASURE_UIN 4

#define QQ_MEASURE_CHSH 8

#define QQ_MEASURE_ALL 15

typedef enum QqStatus {
  QQ_OK = 0,
  QQ_NULL_POINTER = 1,
  QQ_INVALID_ARGUMENT = 2,
  QQ_INVALID_TEMPERATURE = 3,
  QQ_NUMERICAL = 4,
  QQ_CONFIG = 5,
  QQ_NO_BRACKET = 6,
  QQ_UNKNOWN_PRESET = 7,
  QQ_PANIC = 8,
} QqStatus;

/**
 * Ten couplings of the model.
 */
typedef struct QqParams QqParams;

/**
 * A validated 6x6 density matrix.
 */
typedef struct QqState QqState;

/**
 * Measure values; entries not requested in the mask are NaN.
 */
typedef struct QqReport {
  double negativity;
  double min;
  double uin;
  double chsh_max;
} QqReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until the
 * next call into the library from the same thread.
 */
const char *qq_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *qq_version(void);

/**
 * All couplings zero.
 */
struct QqParams *qq_params_new(void);

/**
 * Base couplings of a figure preset (`"fig1"` .. `"fig6"`).
 *
 * # Safety
 * `name` must be NUL-terminated; `out` must be writable.
 */
enum QqStatus qq_params_from_preset(const char *name, struct QqParams **out);

/**
 * # Safety
 * `p` must come from this library and not be freed twice. NULL is ignored.
 */
void qq_params_free(struct QqParams *p);

/**
 * Sets a coupling by name (`B1`, `B2`, `J`, `Jz`, `K`, `K1`, `K2`, `Dz`,
 * `Gamma`, `Lambda`).
 *
 * # Safety
 * `p` must be a live handle; `name` NUL-terminated.
 */
enum QqStatus qq_params_set(struct QqParams *p, const char *name, double value);

/**
 * # Safety
 * `p` must be a live handle; `name` NUL-terminated; `out` writable.
 */
enum QqStatus qq_params_get(const struct QqParams *p, const char *name, double *out);

/**
 * Thermal state `exp(-H/T)/Z`.
 *
 * # Safety
 * `p` must be a live handle; `out` writable.
 */
enum QqStatus qq_state_thermal(const struct QqParams *p, double temperature, struct QqState **out);

/**
 * # Safety
 * `s` must come from this library and not be freed twice. NULL is ignored.
 */
void qq_state_free(struct QqState *s);

/**
 * Matrix element `(row, col)`, both in `0..6`, in the basis
 * `|up,1>, |up,0>, |up,-1>, |down,1>, |down,0>, |down,-1>`.
 *
 * # Safety
 * `s` must be a live handle; `re` and `im` writable.
 */
enum QqStatus qq_state_element(const struct QqState *s,
                               size_t row,
                               size_t col,
                               double *re,
                               double *im);

/**
 * Measures selected by `mask` (`QQ_MEASURE_*` bits).
 *
 * # Safety
 * `s` must be a live handle; `out` writable.
 */
enum QqStatus qq_state_measures(const struct QqState *s, uint32_t mask, struct QqReport *out);

/**
 * Thermal state followed by the selected measures.
 *
 * # Safety
 * `p` must be a live handle; `out` writable.
 */
enum QqStatus qq_run_point(const struct QqParams *p,
                           double temperature,
                           uint32_t mask,
                           struct QqReport *out);

/**
 * Crossing of `measure` (`"negativity"`, `"min"`, `"uin"`, `"chsh"`) through
 * `level` along the axis of a single-curve configuration given as text.
 *
 * # Safety
 * `config` and `measure` NUL-terminated; `out` writable.
 */
enum QqStatus qq_find_threshold(const char *config, const char *measure, double level, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QQCORR_H */
