#ifndef FUZZY_RCC_H
#define FUZZY_RCC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define FRCC_TNORM_LUKASIEWICZ 0

#define FRCC_TNORM_MINIMUM 1

#define FRCC_TNORM_PRODUCT 2

typedef enum FrccStatus {
  FRCC_STATUS_OK = 0,
  FRCC_STATUS_NULL_POINTER = 1,
  FRCC_STATUS_INVALID_ARGUMENT = 2,
  FRCC_STATUS_INVALID_GEOMETRY = 3,
  FRCC_STATUS_PARSE = 4,
  FRCC_STATUS_IO = 5,
  FRCC_STATUS_UNKNOWN_ID = 6,
  FRCC_STATUS_PANIC = 7,
} FrccStatus;

/**
 * Opaque region dataset.
 */
typedef struct FrccDataset FrccDataset;

/**
 * Opaque fuzzy region.
 */
typedef struct FrccRegion FrccRegion;

/**
 * Connection parameters. `tnorm` is one of the `FRCC_TNORM_*` constants.
 */
typedef struct FrccParams {
  double alpha;
  double beta;
  int32_t tnorm;
  /**
   * Grid divisions per axis, at least 1.
   */
  uint32_t dd;
} FrccParams;

/**
 * All fourteen relation grades of an ordered pair.
 */
typedef struct FrccRelations {
  double c;
  double dc;
  double o;
  double p;
  double p_inv;
  double eq;
  double pp;
  double pp_inv;
  double po;
  double ec;
  double tpp;
  double tpp_inv;
  double ntpp;
  double ntpp_inv;
} FrccRelations;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL after a
 * successful one. Valid until the next call into this library.
 */
const char *frcc_last_error(void);

/**
 * Builds a region from WKT (`POLYGON` or `MULTIPOLYGON`) and a support
 * radius.
 *
 * # Safety
 * `wkt` must be a NUL-terminated string; `out` must be writable.
 */
enum FrccStatus frcc_region_from_wkt(const char *wkt,
                                     double support_radius,
                                     struct FrccRegion **out);

/**
 * Builds a single-ring polygon region from `n` interleaved `x, y` pairs.
 *
 * # Safety
 * `xy` must point to `2 * n` doubles; `out` must be writable.
 */
enum FrccStatus frcc_region_from_ring(const double *xy,
                                      size_t n,
                                      double support_radius,
                                      struct FrccRegion **out);

/**
 * # Safety
 * `region` must come from this library and not be freed twice. NULL is
 * ignored.
 */
void frcc_region_free(struct FrccRegion *region);

/**
 * # Safety
 * `region` must be a live handle; `out` must be writable.
 */
enum FrccStatus frcc_membership(const struct FrccRegion *region, double x, double y, double *out);

/**
 * # Safety
 * `out` must be writable.
 */
enum FrccStatus frcc_nearness(double alpha, double beta, double d, double *out);

/**
 * # Safety
 * `out` must be writable.
 */
enum FrccStatus frcc_tnorm(int32_t tnorm, double a, double b, double *out);

/**
 * # Safety
 * `out` must be writable.
 */
enum FrccStatus frcc_residuum(int32_t tnorm, double a, double b, double *out);

/**
 * Grid connection grade of two regions.
 *
 * # Safety
 * `a`, `b` must be live handles; `params` readable; `out` writable.
 */
enum FrccStatus frcc_connect(const struct FrccRegion *a,
                             const struct FrccRegion *b,
                             const struct FrccParams *params,
                             double *out);

/**
 * All relation grades of the ordered pair `(a, b)`.
 *
 * # Safety
 * `a`, `b` must be live handles; `params` readable; `out` writable.
 */
enum FrccStatus frcc_relations(const struct FrccRegion *a,
                               const struct FrccRegion *b,
                               const struct FrccParams *params,
                               struct FrccRelations *out);

/**
 * Loads a GeoJSON or tab-separated WKT region file.
 *
 * # Safety
 * `path` must be a NUL-terminated string; `out` must be writable.
 */
enum FrccStatus frcc_dataset_load(const char *path, struct FrccDataset **out);

/**
 * # Safety
 * `ds` must come from this library and not be freed twice. NULL is
 * ignored.
 */
void frcc_dataset_free(struct FrccDataset *ds);

/**
 * Number of regions, or 0 for NULL.
 *
 * # Safety
 * `ds` must be NULL or a live handle.
 */
size_t frcc_dataset_len(const struct FrccDataset *ds);

/**
 * Copies up to `cap` region ids in file order into `ids` and stores the
 * total count in `out_len`.
 *
 * # Safety
 * `ds` must be a live handle; `ids` must hold `cap` values; `out_len`
 * writable.
 */
enum FrccStatus frcc_dataset_ids(const struct FrccDataset *ds,
                                 int64_t *ids,
                                 size_t cap,
                                 size_t *out_len);

/**
 * Copies one region out of a dataset as a new handle.
 *
 * # Safety
 * `ds` must be a live handle; `out` writable.
 */
enum FrccStatus frcc_dataset_region(const struct FrccDataset *ds,
                                    int64_t id,
                                    struct FrccRegion **out);

/**
 * Fuzzy skyline of `n` candidates with `dims` values each (row-major,
 * smaller is better). Surviving ids and grades are written to `out_ids`
 * and `out_grades` (each with room for `n`) in descending grade order;
 * `out_len` receives their count.
 *
 * # Safety
 * `values` must hold `n * dims` doubles and `ids` `n` ids; the output
 * arrays must hold `n` entries; `out_len` writable.
 */
enum FrccStatus frcc_skyline(const double *values,
                             size_t n,
                             size_t dims,
                             const int64_t *ids,
                             double alpha,
                             double beta,
                             int32_t tnorm,
                             double min_c,
                             int64_t *out_ids,
                             double *out_grades,
                             size_t *out_len);

/**
 * Crisp skyline ids in ascending order; same layout as [`frcc_skyline`].
 *
 * # Safety
 * As for [`frcc_skyline`].
 */
enum FrccStatus frcc_crisp_skyline(const double *values,
                                   size_t n,
                                   size_t dims,
                                   const int64_t *ids,
                                   int64_t *out_ids,
                                   size_t *out_len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FUZZY_RCC_H */
