#ifndef SU2CERT_H
#define SU2CERT_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum Su2Status {
  SU2_STATUS_OK = 0,
  SU2_STATUS_ABSTAIN = 1,
  SU2_STATUS_INCONSISTENT = 2,
  SU2_STATUS_PARSE = 3,
  SU2_STATUS_NULL_POINTER = 4,
  SU2_STATUS_INTERNAL = 5,
} Su2Status;

typedef enum Su2Conclusion {
  SU2_CONCLUSION_NONTRIVIAL_REP = 0,
  SU2_CONCLUSION_IRREDUCIBLE_REP = 1,
  SU2_CONCLUSION_NO_CERTIFICATE = 2,
} Su2Conclusion;

/**
 * Opaque certificate.
 */
typedef struct Su2Certificate Su2Certificate;

/**
 * Opaque knot table.
 */
typedef struct Su2KnotTable Su2KnotTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *su2_version(void);

/**
 * Message of the last failed call on this thread, or NULL. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *su2_last_error_message(void);

/**
 * The built-in knot table.
 */
struct Su2KnotTable *su2_knot_table_builtin(void);

/**
 * Adds the records of a TOML table file. On failure the table is unchanged.
 *
 * # Safety
 * `table` must come from [`su2_knot_table_builtin`]; `toml` must be a
 * NUL-terminated string.
 */
enum Su2Status su2_knot_table_load(struct Su2KnotTable *table, const char *toml);

/**
 * # Safety
 * `table` must come from [`su2_knot_table_builtin`] or be NULL.
 */
void su2_knot_table_free(struct Su2KnotTable *table);

/**
 * Certifies `S^3_slope(knot)`. On `Ok` or `Abstain`, `*out` receives a
 * certificate handle.
 *
 * # Safety
 * Pointers must be valid; strings NUL-terminated.
 */
enum Su2Status su2_certify_surgery(const struct Su2KnotTable *table,
                                   const char *knot,
                                   const char *slope,
                                   struct Su2Certificate **out);

/**
 * Certifies a Seifert fibered space written as `M(e; q1/p1, ...)`.
 *
 * # Safety
 * `data` must be NUL-terminated and `out` writable.
 */
enum Su2Status su2_certify_seifert(const char *data, struct Su2Certificate **out);

/**
 * # Safety
 * `cert` must be a live certificate handle.
 */
enum Su2Conclusion su2_certificate_conclusion(const struct Su2Certificate *cert);

/**
 * Re-executes every step of the certificate.
 *
 * # Safety
 * `cert` must be a live certificate handle.
 */
enum Su2Status su2_certificate_validate(const struct Su2Certificate *cert);

/**
 * JSON rendering; release with [`su2_string_free`]. NULL on failure.
 *
 * # Safety
 * `cert` must be a live certificate handle.
 */
char *su2_certificate_json(const struct Su2Certificate *cert);

/**
 * # Safety
 * `cert` must come from a certify call or be NULL.
 */
void su2_certificate_free(struct Su2Certificate *cert);

/**
 * # Safety
 * `s` must come from this library or be NULL.
 */
void su2_string_free(char *s);

/**
 * Casson invariant of +1 surgery on a table knot, as a reduced fraction.
 *
 * # Safety
 * Pointers must be valid; `knot` NUL-terminated.
 */
enum Su2Status su2_casson_plus_one(const struct Su2KnotTable *table,
                                   const char *knot,
                                   int64_t *numer,
                                   int64_t *denom);

/**
 * `|H1|` of a Seifert fibered space; 0 means infinite.
 *
 * # Safety
 * `data` must be NUL-terminated and `out` writable.
 */
enum Su2Status su2_seifert_h1_order(const char *data, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SU2CERT_H */
