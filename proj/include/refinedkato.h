#ifndef REFINEDKATO_H
#define REFINEDKATO_H

/* C interface to the refined Kato verification library. A run handle holds
 * suite options, executes one suite at a time, and keeps the last report for
 * rendering. All functions are synchronous; handles are not thread-safe. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rk_status {
    RK_OK = 0,
    RK_ERR_INVALID_ARGUMENT = 1,
    RK_ERR_IO = 2,
    RK_ERR_NO_REPORT = 3,
    RK_ERR_INTERNAL = 4
} rk_status;

typedef struct rk_run rk_run;

const char* rk_version(void);

rk_run* rk_run_new(void);
void rk_run_free(rk_run* run);

/* Message for the most recent failing call on this handle ("" when none). */
const char* rk_last_error(const rk_run* run);

/* --- options (apply to the next suite execution) ------------------------- */

rk_status rk_set_n_max(rk_run* run, int n_max);
rk_status rk_set_complex(rk_run* run, int include_complex, int n_max_complex);
rk_status rk_set_seed(rk_run* run, unsigned long long seed);
/* which: "algebra" | "eigen" | "sweep" */
rk_status rk_set_tolerance(rk_run* run, const char* which, double value);
/* Adds epsilon to one entry of every constructed map in the verify suite. */
rk_status rk_set_perturb(rk_run* run, double epsilon);
/* which: "equivariance" | "ellipticity" */
rk_status rk_set_samples(rk_run* run, const char* which, int count);
rk_status rk_set_spot_check(rk_run* run, int enabled);
rk_status rk_set_catalog_path(rk_run* run, const char* path);
rk_status rk_set_catalog_text(rk_run* run, const char* text);
/* Overrides for every catalog entry; 0 / 0.0 keep the per-entry values. */
rk_status rk_set_grid(rk_run* run, int points_per_axis, double half_width);

/* --- suite execution ------------------------------------------------------ */

rk_status rk_run_constants(rk_run* run);
rk_status rk_run_verify(rk_run* run);
rk_status rk_run_fields(rk_run* run);

/* --- results of the last executed suite ----------------------------------- */

long rk_passed(const rk_run* run);
long rk_failed(const rk_run* run);
long rk_undefined_points(const rk_run* run);

/* Rendered report in format "json" | "csv" | "md". The pointer stays valid
 * until the next call on the same handle. NULL on error. */
const char* rk_report(rk_run* run, const char* format);
rk_status rk_report_write(rk_run* run, const char* format, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* REFINEDKATO_H */
