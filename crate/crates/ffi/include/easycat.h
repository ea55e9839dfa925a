#ifndef EASYCAT_H
#define EASYCAT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result of a membership query.
 */
typedef enum {
  EC_MEMBERSHIP_IN = 0,
  EC_MEMBERSHIP_NOT_FOUND_WITHIN_BUDGET = 1,
} EcMembership;

/**
 * Status codes returned by every fallible function.
 */
typedef enum {
  EC_STATUS_OK = 0,
  EC_STATUS_NULL_POINTER = 1,
  EC_STATUS_INVALID_UTF8 = 2,
  EC_STATUS_PARSE = 3,
  EC_STATUS_INVALID_ARGUMENT = 4,
  EC_STATUS_COLOR_MISMATCH = 5,
  EC_STATUS_UNKNOWN_NAME = 6,
  EC_STATUS_BUDGET_EXCEEDED = 7,
  EC_STATUS_SIZE_OVERFLOW = 8,
  EC_STATUS_NOT_SATURATED = 9,
  EC_STATUS_BUFFER_TOO_SMALL = 10,
  EC_STATUS_PANIC = 11,
} EcStatus;

/**
 * A saturated category closure.
 */
typedef struct EcClosure EcClosure;

/**
 * A two-row colored partition diagram.
 */
typedef struct EcDiagram EcDiagram;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until the next call.
 */
const char *ec_last_error(void);

/**
 * Static name of a status code.
 */
const char *ec_status_name(EcStatus status);

/**
 * Frees a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void ec_string_free(char *s);

/**
 * Parses `"wbw|bb;u1-l2,u2-u3,l1"`-style text.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
EcStatus ec_diagram_parse(const char *text, EcDiagram **out);

/**
 * # Safety
 * `d` must come from this library and not be freed twice. NULL is ignored.
 */
void ec_diagram_free(EcDiagram *d);

/**
 * Canonical text form.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
EcStatus ec_diagram_to_string(const EcDiagram *d, char **out);

/**
 * Number of legs and number of blocks.
 *
 * # Safety
 * `d` must be a live handle; outputs may be NULL.
 */
EcStatus ec_diagram_shape(const EcDiagram *d, size_t *points, size_t *blocks);

/**
 * `top` stacked on `bottom`; `loops` receives the number of removed closed components.
 *
 * # Safety
 * Handles must be live; `out` writable; `loops` may be NULL.
 */
EcStatus ec_diagram_compose(const EcDiagram *top,
                            const EcDiagram *bottom,
                            EcDiagram **out,
                            size_t *loops);

/**
 * Horizontal concatenation.
 *
 * # Safety
 * Handles must be live; `out` writable.
 */
EcStatus ec_diagram_tensor(const EcDiagram *left, const EcDiagram *right, EcDiagram **out);

/**
 * Upside-down turning, colors preserved.
 *
 * # Safety
 * `d` must be live; `out` writable.
 */
EcStatus ec_diagram_involute(const EcDiagram *d, EcDiagram **out);

/**
 * Moves the leftmost upper leg to the leftmost lower position, inverting its color.
 *
 * # Safety
 * `d` must be live; `out` writable.
 */
EcStatus ec_diagram_rotate(const EcDiagram *d, EcDiagram **out);

/**
 * Whether `d` satisfies the predicate of a named class (`P2`, `calNC2`, `P2star`, ...).
 *
 * # Safety
 * `d` live, `class` NUL-terminated, `out` writable.
 */
EcStatus ec_diagram_in_class(const EcDiagram *d, const char *class_, bool *out);

/**
 * Dense `T_π` at dimension `n`, row-major into `buf` (entries are 0 or 1).
 *
 * `rows` and `cols` always receive the shape; if `buf` is NULL or `len` is
 * too small the call returns `BufferTooSmall` without writing entries.
 *
 * # Safety
 * `d` live; `buf` must hold `len` bytes when non-NULL; `rows`, `cols` writable.
 */
EcStatus ec_diagram_t_matrix(const EcDiagram *d,
                             size_t n,
                             uint8_t *buf,
                             size_t len,
                             size_t *rows,
                             size_t *cols);

/**
 * Closes a named geometry's generators up to `max_points` legs.
 *
 * # Safety
 * `geometry` NUL-terminated; `out` writable.
 */
EcStatus ec_closure_new(const char *geometry, size_t max_points, EcClosure **out);

/**
 * # Safety
 * `c` must come from this library and not be freed twice. NULL is ignored.
 */
void ec_closure_free(EcClosure *c);

/**
 * Number of diagrams in the closure.
 *
 * # Safety
 * `c` live; `out` writable.
 */
EcStatus ec_closure_size(const EcClosure *c, size_t *out);

/**
 * # Safety
 * Handles live; `out` writable.
 */
EcStatus ec_closure_contains(const EcClosure *c, const EcDiagram *d, EcMembership *out);

/**
 * Closure table as JSON.
 *
 * # Safety
 * `c` live; `out` writable.
 */
EcStatus ec_closure_to_json(const EcClosure *c, char **out);

/**
 * Brauer comparison report as JSON.
 *
 * # Safety
 * `geometry` NUL-terminated; `seeds` holds `num_seeds` values; `out` writable.
 */
EcStatus ec_brauer_json(const char *geometry,
                        size_t n,
                        size_t max_points,
                        const uint64_t *seeds,
                        size_t num_seeds,
                        char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EASYCAT_H */
