/* C interface to the congruence distance library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions return CGD_OK on success; on failure they return an error code
 * and leave a human-readable message retrievable via cgd_last_error() on the
 * calling thread. Output parameters are untouched on failure.
 *
 * Handles are immutable after creation and safe to share across threads.
 */
#ifndef CONGRUENCE_H
#define CONGRUENCE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cgd_status {
  CGD_OK = 0,
  CGD_ERR_DIMENSION = 1,
  CGD_ERR_LENGTH = 2,
  CGD_ERR_IO = 3,
  CGD_ERR_PARSE = 4,
  CGD_ERR_INVALID_ARGUMENT = 5,
  CGD_ERR_UNKNOWN = 6
} cgd_status;

typedef enum cgd_format {
  CGD_FORMAT_CSV_SINGLE = 0,
  CGD_FORMAT_JSONL_COLLECTION = 1
} cgd_format;

typedef enum cgd_measure {
  CGD_MEASURE_DTW = 0,
  CGD_MEASURE_DELTA = 1,
  CGD_MEASURE_FAST_DELTA = 2,
  CGD_MEASURE_GREEDY = 3,
  CGD_MEASURE_FAST_GREEDY = 4
} cgd_measure;

typedef struct cgd_series cgd_series;
typedef struct cgd_dataset cgd_dataset;

typedef struct cgd_opt_config {
  int max_iterations;
  double objective_tolerance;
  double constraint_tolerance;
  int multistart_count;
  uint64_t seed;
} cgd_opt_config;

typedef struct cgd_opt_result {
  double value;
  int iterations_used;
  int converged; /* 0 or 1 */
  double orthogonality_residual;
} cgd_opt_result;

/* Thread-local message describing the most recent failure on this thread. */
const char* cgd_last_error(void);

/* Fills *cfg with the library defaults. */
void cgd_opt_config_default(cgd_opt_config* cfg);

/* ---- time series ---- */

/* data: row-major, n rows of k coordinates. */
cgd_status cgd_series_create(const double* data, int n, int k, cgd_series** out);
void cgd_series_free(cgd_series* series);

int cgd_series_length(const cgd_series* series);
int cgd_series_dim(const cgd_series* series);
/* out must hold n*k doubles; written row-major. */
cgd_status cgd_series_copy_points(const cgd_series* series, double* out);

cgd_status cgd_series_load(const char* path, cgd_format format, cgd_series** out);
cgd_status cgd_series_save(const cgd_series* series, const char* path,
                           cgd_format format, const char* id);

/* ---- distances ---- */

cgd_status cgd_distance(cgd_measure measure, const cgd_series* s,
                        const cgd_series* t, double* out);

cgd_status cgd_congruence_upper(const cgd_series* s, const cgd_series* t,
                                const cgd_opt_config* cfg, cgd_opt_result* out);

/* Dense rotation sweep ground truth; dimension must be 1 or 2. */
cgd_status cgd_congruence_oracle_2d(const cgd_series* s, const cgd_series* t,
                                    int angle_steps, double* out);

/* ---- generation and preprocessing ---- */

cgd_status cgd_generate_walk(int k, int n, double step_scale, int smoothing_window,
                             uint64_t seed, cgd_series** out);

cgd_status cgd_arc_length_resample(const cgd_series* series, int m, cgd_series** out);

/* Applies a seeded random isometry: random orthogonal matrix plus a Gaussian
 * translation of the given scale. */
cgd_status cgd_random_transform(const cgd_series* series, uint64_t seed,
                                double translation_scale, cgd_series** out);

/* ---- datasets ---- */

cgd_status cgd_dataset_create(cgd_dataset** out);
void cgd_dataset_free(cgd_dataset* ds);

/* label may be NULL. The series is copied. */
cgd_status cgd_dataset_add(cgd_dataset* ds, const char* id, const char* label,
                           const cgd_series* series);
int cgd_dataset_size(const cgd_dataset* ds);
/* Returned strings stay valid while the dataset lives; label is NULL when
 * absent. The series is returned as a fresh handle owned by the caller. */
cgd_status cgd_dataset_get(const cgd_dataset* ds, int index, const char** id,
                           const char** label, cgd_series** series);

cgd_status cgd_dataset_load(const char* path, cgd_format format, cgd_dataset** out);
cgd_status cgd_dataset_save(const cgd_dataset* ds, const char* path, cgd_format format);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CONGRUENCE_H */
