/* C interface for the bsts incidence-geometry library. */

#ifndef BSTS_H
#define BSTS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum BstsStatus {
  BstsStatus_Ok = 0,
  BstsStatus_NullArgument = 1,
  BstsStatus_InvalidUtf8 = 2,
  BstsStatus_ParseError = 3,
  BstsStatus_ValidationError = 4,
  BstsStatus_BudgetExceeded = 5,
  BstsStatus_NotBinomial = 6,
  BstsStatus_InternalError = 7,
} BstsStatus;

/**
 * An opaque, immutable configuration handle.
 */
typedef struct BstsConfiguration BstsConfiguration;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The most recent failure detail on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *bsts_last_error(void);

/**
 * A static description of a status code.
 */
const char *bsts_status_message(enum BstsStatus status);

/**
 * Parses a configuration document (JSON text) into a handle.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string; `out` must be a valid
 * pointer. On success the caller owns the handle and must release it
 * with [`bsts_configuration_free`].
 */
enum BstsStatus bsts_configuration_parse(const char *json, struct BstsConfiguration **out);

/**
 * Builds a named family: `desargues`, `quasi-grassmannian`,
 * `dual-veronesian` (parameter n), `veronesian` (parameter k), or
 * `tetrahedra` (parameter m).
 *
 * # Safety
 * `family` must be a valid NUL-terminated string; `out` must be a valid
 * pointer. On success the caller owns the handle.
 */
enum BstsStatus bsts_configuration_family(const char *family,
                                          uint32_t parameter,
                                          struct BstsConfiguration **out);

/**
 * Releases a handle returned by this library. Null is a no-op.
 *
 * # Safety
 * `cfg` must be null or a handle obtained from this library that has not
 * been freed yet.
 */
void bsts_configuration_free(struct BstsConfiguration *cfg);

/**
 * Number of points; 0 for a null handle.
 *
 * # Safety
 * `cfg` must be null or a live handle.
 */
uint32_t bsts_configuration_points(const struct BstsConfiguration *cfg);

/**
 * Number of lines; 0 for a null handle.
 *
 * # Safety
 * `cfg` must be null or a live handle.
 */
uint32_t bsts_configuration_lines(const struct BstsConfiguration *cfg);

/**
 * Whether the configuration satisfies the partial-Steiner axioms.
 *
 * # Safety
 * `cfg` must be a live handle; `out` must be a valid pointer.
 */
enum BstsStatus bsts_configuration_is_psts(const struct BstsConfiguration *cfg, bool *out);

/**
 * The order n of the binomial shape (C(n,2) points, C(n,3) lines), when
 * the configuration has one.
 *
 * # Safety
 * `cfg` must be a live handle; `out` must be a valid pointer.
 */
enum BstsStatus bsts_configuration_binomial_order(const struct BstsConfiguration *cfg,
                                                  uint32_t *out);

/**
 * Serializes the configuration as a canonical document under `name`.
 * The returned string is owned by the caller; release it with
 * [`bsts_string_free`].
 *
 * # Safety
 * `cfg` must be a live handle; `name` a valid string; `out` a valid
 * pointer.
 */
enum BstsStatus bsts_configuration_serialize(const struct BstsConfiguration *cfg,
                                             const char *name,
                                             char **out);

/**
 * Counts all hyperplanes.
 *
 * # Safety
 * `cfg` must be a live handle; `out` must be a valid pointer.
 */
enum BstsStatus bsts_hyperplane_count(const struct BstsConfiguration *cfg, uint64_t *out);

/**
 * The projective dimension of the Veldkamp space (-1 when empty).
 *
 * # Safety
 * `cfg` must be a live handle; `out` must be a valid pointer.
 */
enum BstsStatus bsts_veldkamp_dimension(const struct BstsConfiguration *cfg, int32_t *out);

/**
 * Counts the freely contained complete graphs with `size` vertices.
 *
 * # Safety
 * `cfg` must be a live handle; `out` must be a valid pointer.
 */
enum BstsStatus bsts_free_graph_count(const struct BstsConfiguration *cfg,
                                      uint32_t size,
                                      uint64_t *out);

/**
 * The canonical certificate as a hex string (caller-owned).
 *
 * # Safety
 * `cfg` must be a live handle; `out` must be a valid pointer.
 */
enum BstsStatus bsts_certificate_hex(const struct BstsConfiguration *cfg, char **out);

/**
 * Certificate equality of two configurations.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be a valid pointer.
 */
enum BstsStatus bsts_is_isomorphic(const struct BstsConfiguration *a,
                                   const struct BstsConfiguration *b,
                                   bool *out);

/**
 * The Veldkamp space rendered as DOT text (caller-owned string). With
 * `labeled` set, nodes carry the induced-geometry tags.
 *
 * # Safety
 * `cfg` must be a live handle; `out` must be a valid pointer.
 */
enum BstsStatus bsts_veldkamp_dot(const struct BstsConfiguration *cfg, bool labeled, char **out);

/**
 * Releases a string returned by this library. Null is a no-op.
 *
 * # Safety
 * `s` must be null or a string obtained from this library that has not
 * been freed yet.
 */
void bsts_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* BSTS_H */
