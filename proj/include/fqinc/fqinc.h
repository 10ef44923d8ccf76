/*
 * fqinc: point-sphere incidence geometry over odd prime fields F_q.
 *
 * C interface to the fqinc core. Objects are opaque handles created by
 * fqinc_*_create (or a producing call) and released by the matching
 * fqinc_*_destroy; destroy functions accept NULL. Every fallible call
 * returns an fqinc_status; on failure fqinc_last_error() describes the
 * problem (thread-local, valid until the next fqinc call on that thread)
 * and output handles are left untouched.
 *
 * Handles are immutable once built, except point sets and sphere families
 * while they are being filled with *_add. Reading one handle from several
 * threads is safe.
 */
#ifndef FQINC_H_
#define FQINC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FQINC_BUILDING)
#    define FQINC_API __declspec(dllexport)
#  else
#    define FQINC_API __declspec(dllimport)
#  endif
#else
#  define FQINC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fqinc_status {
  FQINC_OK = 0,
  FQINC_ERR_INVALID_ARGUMENT = 1,
  FQINC_ERR_CONTEXT_MISMATCH = 2,
  FQINC_ERR_BUDGET_EXCEEDED = 3,
  FQINC_ERR_PARSE = 4,
  FQINC_ERR_IO = 5,
  FQINC_ERR_DUPLICATE = 6,
  FQINC_ERR_BUFFER_TOO_SMALL = 7,
  FQINC_ERR_NULL_ARGUMENT = 8,
  FQINC_ERR_INTERNAL = 9
} fqinc_status;

typedef enum fqinc_engine {
  FQINC_ENGINE_NAIVE = 0,
  FQINC_ENGINE_BUCKETED = 1,
  FQINC_ENGINE_LIFTED = 2
} fqinc_engine;

typedef enum fqinc_verdict {
  FQINC_VERDICT_HOLDS = 0,
  FQINC_VERDICT_VACUOUS = 1,
  FQINC_VERDICT_VIOLATED = 2
} fqinc_verdict;

typedef struct fqinc_space fqinc_space;
typedef struct fqinc_point_set fqinc_point_set;
typedef struct fqinc_sphere_family fqinc_sphere_family;
typedef struct fqinc_report fqinc_report;

FQINC_API const char* fqinc_last_error(void);
FQINC_API const char* fqinc_status_name(fqinc_status status);
FQINC_API const char* fqinc_version(void);

/* "n/d" or an integer; no range check. */
FQINC_API fqinc_status fqinc_parse_rational(const char* text, int64_t* num, int64_t* den);

/* ---- (q, d) context ---------------------------------------------------- */

/* q must be an odd prime, d >= 1. */
FQINC_API fqinc_status fqinc_space_create(uint64_t q, uint32_t d, fqinc_space** out);
FQINC_API void fqinc_space_destroy(fqinc_space* space);
FQINC_API uint64_t fqinc_space_q(const fqinc_space* space);
FQINC_API uint32_t fqinc_space_d(const fqinc_space* space);

/* ---- point sets -------------------------------------------------------- */

FQINC_API fqinc_status fqinc_point_set_create(const fqinc_space* space, fqinc_point_set** out);
/* coords: n = d canonical residues. Duplicates fail with FQINC_ERR_DUPLICATE. */
FQINC_API fqinc_status fqinc_point_set_add(fqinc_point_set* set, const uint64_t* coords, size_t n);
FQINC_API size_t fqinc_point_set_size(const fqinc_point_set* set);
FQINC_API fqinc_status fqinc_point_set_get(const fqinc_point_set* set, size_t index,
                                           uint64_t* coords, size_t n);
/* shape: "random:N", "full", "line", "circle:N" or "grid:AxB". */
FQINC_API fqinc_status fqinc_point_set_generate(const fqinc_space* space, const char* shape,
                                                uint64_t seed, fqinc_point_set** out);
/* expected may be NULL; otherwise the file header must match it. */
FQINC_API fqinc_status fqinc_point_set_read(const char* path, const fqinc_space* expected,
                                            fqinc_point_set** out);
FQINC_API fqinc_status fqinc_point_set_write(const fqinc_point_set* set, const char* path);
/* New handle describing the set's context. */
FQINC_API fqinc_status fqinc_point_set_space(const fqinc_point_set* set, fqinc_space** out);
FQINC_API void fqinc_point_set_destroy(fqinc_point_set* set);

/* ---- sphere families --------------------------------------------------- */

FQINC_API fqinc_status fqinc_sphere_family_create(const fqinc_space* space,
                                                  fqinc_sphere_family** out);
/* center: n = d residues. */
FQINC_API fqinc_status fqinc_sphere_family_add(fqinc_sphere_family* family, const uint64_t* center,
                                               size_t n, uint64_t lambda);
FQINC_API size_t fqinc_sphere_family_size(const fqinc_sphere_family* family);
FQINC_API fqinc_status fqinc_sphere_family_get(const fqinc_sphere_family* family, size_t index,
                                               uint64_t* center, size_t n, uint64_t* lambda);
/* All q^(d+1) spheres, lambda = 0 included. */
FQINC_API fqinc_status fqinc_sphere_family_all(const fqinc_space* space, fqinc_sphere_family** out);
FQINC_API fqinc_status fqinc_sphere_family_random(const fqinc_space* space, uint64_t count,
                                                  uint64_t seed, fqinc_sphere_family** out);
FQINC_API fqinc_status fqinc_sphere_family_read(const char* path, const fqinc_space* expected,
                                                fqinc_sphere_family** out);
FQINC_API fqinc_status fqinc_sphere_family_write(const fqinc_sphere_family* family,
                                                 const char* path);
FQINC_API void fqinc_sphere_family_destroy(fqinc_sphere_family* family);

/* ---- counting and geometry --------------------------------------------- */

FQINC_API fqinc_status fqinc_count_incidences(const fqinc_point_set* points,
                                              const fqinc_sphere_family* spheres,
                                              fqinc_engine engine, uint64_t* out);
/* Concentric spheres around pin (n = d residues), one per realized distance. */
FQINC_API fqinc_status fqinc_pinned_cover(const fqinc_point_set* points, const uint64_t* pin,
                                          size_t n, fqinc_sphere_family** out);
/* d = 2. Circles through three distinct non-collinear points of the set. */
FQINC_API fqinc_status fqinc_determined_circles(const fqinc_point_set* points,
                                                fqinc_sphere_family** out);
/* d = 2. Circles holding at least min_points points of the set. */
FQINC_API fqinc_status fqinc_rich_circles(const fqinc_point_set* points, uint64_t min_points,
                                          fqinc_sphere_family** out);

/* ---- theorem checks ---------------------------------------------------- */

FQINC_API fqinc_status fqinc_check_main(const fqinc_point_set* points,
                                        const fqinc_sphere_family* spheres, fqinc_engine engine,
                                        fqinc_report** out);
/* epsilon = num/den in (0, 1). */
FQINC_API fqinc_status fqinc_check_pinned_average(const fqinc_point_set* points, int64_t num,
                                                  int64_t den, fqinc_report** out);
/* alpha = num/den in (0, 1). */
FQINC_API fqinc_status fqinc_check_pinned_fraction(const fqinc_point_set* points, int64_t num,
                                                   int64_t den, fqinc_report** out);
FQINC_API fqinc_status fqinc_check_beck(const fqinc_point_set* points, fqinc_report** out);
/* Every x in F_q^(d+1): brute-force r_{A-A}(x) against the closed form. */
FQINC_API fqinc_status fqinc_sweep_lifted_diff(const fqinc_space* space, fqinc_report** out);
/* Random subsets of F_q^d (d = ambient dimension here). */
FQINC_API fqinc_status fqinc_run_identity_trials(const fqinc_space* space, uint64_t trials,
                                                 uint64_t seed, fqinc_report** out);

FQINC_API fqinc_verdict fqinc_report_verdict(const fqinc_report* report);
/*
 * Canonical JSON object of the report, NUL-terminated. *needed receives the
 * byte count including the terminator; buf may be NULL when cap is 0.
 */
FQINC_API fqinc_status fqinc_report_json(const fqinc_report* report, char* buf, size_t cap,
                                         size_t* needed);
FQINC_API void fqinc_report_destroy(fqinc_report* report);

#ifdef __cplusplus
}
#endif

#endif /* FQINC_H_ */
