#ifndef PARTIALWAVE_H
#define PARTIALWAVE_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum PwStatus {
  PW_STATUS_OK = 0,
  PW_STATUS_NULL_POINTER = 1,
  PW_STATUS_INVALID_ARGUMENT = 2,
  PW_STATUS_DOMAIN = 3,
  PW_STATUS_OVERFLOW = 4,
  PW_STATUS_NO_CONVERGENCE = 5,
  PW_STATUS_INTEGRATION = 6,
  PW_STATUS_IDENTICALLY_ZERO = 7,
  PW_STATUS_BOUNDARY_ZERO = 8,
  PW_STATUS_BUFFER_TOO_SMALL = 9,
  PW_STATUS_INTERNAL = 10,
  PW_STATUS_PANIC = 11,
} PwStatus;

/**
 * Opaque transparency certificate.
 */
typedef struct PwCertificate PwCertificate;

/**
 * Opaque radial well.
 */
typedef struct PwPotential PwPotential;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty after a success.
 * Valid until the next call into this library on the same thread.
 */
const char *pw_last_error_message(void);

/**
 * Library version, static storage.
 */
const char *pw_version(void);

/**
 * Writes the hex hash of the bump definition (64 chars plus NUL) into `buf`.
 */
enum PwStatus pw_chi_hash(char *buf, size_t len);

/**
 * Smooth bump well of radius `r`.
 */
enum PwStatus pw_potential_chi_well(double r, struct PwPotential **out);

enum PwStatus pw_potential_step(double depth, double radius, struct PwPotential **out);

/**
 * Parses `chi:R=<r>` or `step:depth=<d>,radius=<a>`.
 */
enum PwStatus pw_potential_parse(const char *spec, struct PwPotential **out);

void pw_potential_free(struct PwPotential *p);

enum PwStatus pw_potential_support_radius(const struct PwPotential *p, double *out);

/**
 * `J_ν(x), J'_ν(x), Y_ν(x), Y'_ν(x)`.
 */
enum PwStatus pw_bessel_jy(double nu, double x, double *j, double *jp, double *y, double *yp);

/**
 * Phase shift in `(−π/2, π/2]` for the well `p` at coupling `lambda`.
 */
enum PwStatus pw_phase_shift(const struct PwPotential *p,
                             uint32_t l,
                             uint32_t n,
                             double k,
                             double lambda,
                             double *out);

enum PwStatus pw_count_bound_states(const struct PwPotential *p,
                                    uint32_t l,
                                    uint32_t n,
                                    double lambda,
                                    size_t *out);

/**
 * Determinant of the free Bessel pair and the regular solution of the
 * bump well of radius `r`, evaluated at `r_eval`.
 */
enum PwStatus pw_wronskian_d(uint32_t l,
                             uint32_t n,
                             double k,
                             double lambda,
                             double r,
                             double r_eval,
                             double *raw,
                             double *normalized);

/**
 * Sorted eigenvalues of the `N × N` model operator into `buf[0..N]`.
 */
enum PwStatus pw_model_eigenvalues(size_t n, double k, double *buf, size_t len);

/**
 * Non-transparency certificate with default grid and threshold, `n = 3`.
 */
enum PwStatus pw_certify(double lambda,
                         double r,
                         double x0_norm,
                         uint32_t l_max,
                         uint32_t lt_max,
                         double k_lo,
                         double k_hi,
                         struct PwCertificate **out);

/**
 * `*passed` is 1 for a pass verdict, 0 for fail.
 */
enum PwStatus pw_certificate_passed(const struct PwCertificate *c, int32_t *passed);

/**
 * `*has_margin` is 0 when the unit well has no zeros (unbounded margin).
 */
enum PwStatus pw_certificate_margin(const struct PwCertificate *c,
                                    double *margin,
                                    int32_t *has_margin);

/**
 * JSON text of the certificate; release with [`pw_string_free`].
 */
enum PwStatus pw_certificate_json(const struct PwCertificate *c, char **out);

void pw_certificate_free(struct PwCertificate *c);

void pw_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PARTIALWAVE_H */
