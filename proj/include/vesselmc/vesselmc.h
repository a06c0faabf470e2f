/* vesselmc — Monte Carlo burst-failure reliability for unflawed
 * thin-walled cylindrical pressure vessels.
 *
 * C interface of the shared library. All functions return a vmc_status;
 * outputs are written through pointers. On any non-VMC_OK return,
 * vmc_last_error() gives a human-readable diagnostic for the calling
 * thread. Handles are opaque and must be released with the matching
 * *_free function. All quantities are SI (Pa, m) unless noted.
 */

#ifndef VESSELMC_H
#define VESSELMC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define VMC_API __declspec(dllexport)
#else
#define VMC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vmc_status {
  VMC_OK = 0,
  VMC_ERR_ARGUMENT = 1,   /* null pointer or malformed argument */
  VMC_ERR_DOMAIN = 2,     /* input outside a mathematical domain */
  VMC_ERR_PARSE = 3,      /* config document is not valid JSON */
  VMC_ERR_VALIDATION = 4, /* config or model invariant violated */
  VMC_ERR_CONFIG = 5,     /* unknown key/name, duplicate or missing block */
  VMC_ERR_IO = 6          /* filesystem failure */
} vmc_status;

typedef enum vmc_criterion {
  VMC_CRITERION_FAUPEL = 0,
  VMC_CRITERION_SVENSSON = 1,
  VMC_CRITERION_CHRISTOPHER = 2,
  VMC_CRITERION_ZHENG = 3,
  VMC_CRITERION_BRABIN = 4
} vmc_criterion;

#define VMC_CRITERION_COUNT 5

/* Why a sample admits no burst pressure. */
typedef enum vmc_sample_flag {
  VMC_SAMPLE_VALID = 0,
  VMC_SAMPLE_NONPOSITIVE_WALL = 1,     /* d_o <= d_i */
  VMC_SAMPLE_NONPOSITIVE_GEOMETRY = 2, /* d_i <= 0 */
  VMC_SAMPLE_INVALID_MATERIAL = 3      /* s_y <= 0 or s_u < s_y */
} vmc_sample_flag;

VMC_API const char* vmc_version(void);
VMC_API const char* vmc_status_name(vmc_status status);

/* Diagnostic for the most recent failing call on this thread, or "" if the
 * last call succeeded. The buffer stays valid until the thread's next
 * vesselmc call. */
VMC_API const char* vmc_last_error(void);

/* Canonical lowercase name (faupel, svensson, christopher, zheng, brabin),
 * or NULL for an out-of-range value. */
VMC_API const char* vmc_criterion_name(vmc_criterion c);
VMC_API vmc_status vmc_criterion_from_name(const char* name,
                                           vmc_criterion* out);

/* --- normal-distribution toolbox -------------------------------------- */

/* Phi^-1(p); requires 0 < p < 1. Absolute error < 1e-9 on
 * [1e-12, 1 - 1e-12]. */
VMC_API vmc_status vmc_normal_quantile(double p, double* out);

/* Phi(z); requires finite z. Absolute error < 1e-12. */
VMC_API vmc_status vmc_normal_cdf(double z, double* out);

/* --- burst criteria ---------------------------------------------------- */

/* Strain-hardening exponent r = 0.224 (s_u/s_y - 1)^0.604.
 * Requires s_y > 0 and s_u >= s_y. */
VMC_API vmc_status vmc_strain_hardening_exponent(double s_y, double s_u,
                                                 double* out);

/* Burst pressure of an explicit sample. Always returns VMC_OK for finite
 * inputs: inadmissible samples set *flag to the reason and *out_pa to NaN
 * instead of failing. */
VMC_API vmc_status vmc_burst_pressure(vmc_criterion c, double p_o, double s_y,
                                      double s_u, double d_o, double d_i,
                                      double* out_pa, vmc_sample_flag* flag);

/* --- vessel model ------------------------------------------------------ */

typedef struct vmc_model vmc_model;

/* means/std_devs are indexed in the fixed variable order:
 * operating pressure, yield strength, ultimate strength, outer diameter,
 * inner diameter (Pa, Pa, Pa, m, m). Fails with VMC_ERR_VALIDATION when a
 * model invariant is violated. */
VMC_API vmc_status vmc_model_create(const double means[5],
                                    const double std_devs[5],
                                    vmc_model** out);
VMC_API void vmc_model_free(vmc_model* model);

/* Burst pressure at the model means; the flag is always
 * VMC_SAMPLE_VALID for a successfully created model. */
VMC_API vmc_status vmc_burst_at_means(const vmc_model* model, vmc_criterion c,
                                      double* out_pa, vmc_sample_flag* flag);

typedef struct vmc_estimate {
  double pof;
  double reliability; /* exactly 1 - pof */
  double std_error;   /* sqrt(pof (1-pof) / trials) */
  uint64_t trials;
  uint64_t failures;
  uint64_t invalid_samples;
} vmc_estimate;

/* Monte Carlo estimate of the failure probability under criterion c.
 * threads <= 0 selects hardware concurrency; any thread count returns
 * bit-identical results for the same (model, criterion, trials, seed). */
VMC_API vmc_status vmc_estimate_pof(const vmc_model* model, vmc_criterion c,
                                    uint64_t trials, uint64_t seed,
                                    int threads, vmc_estimate* out);

/* --- studies and reports ------------------------------------------------ */

/* A study bundles a JSON configuration (model in MPa/mm display units,
 * criteria list, run parameters, optional sweep/sensitivity blocks) with
 * the runners behind the CLI subcommands. */
typedef struct vmc_study vmc_study;

VMC_API vmc_status vmc_study_parse_file(const char* path, vmc_study** out);
VMC_API vmc_status vmc_study_parse_text(const char* json_text,
                                        vmc_study** out);
VMC_API void vmc_study_free(vmc_study* study);

/* Overrides applied after parsing. */
VMC_API vmc_status vmc_study_set_seed(vmc_study* study, uint64_t seed);
VMC_API vmc_status vmc_study_set_trials(vmc_study* study, uint64_t trials);
VMC_API vmc_status vmc_study_set_threads(vmc_study* study, int threads);

/* A fully rendered command outcome: a summary for standard output plus the
 * report files, produced in memory before anything touches the disk. */
typedef struct vmc_report vmc_report;

VMC_API vmc_status vmc_study_run_burst(const vmc_study* study,
                                       vmc_report** out);
VMC_API vmc_status vmc_study_run_estimate(const vmc_study* study,
                                          vmc_report** out);
VMC_API vmc_status vmc_study_run_sweep(const vmc_study* study,
                                       vmc_report** out);
VMC_API vmc_status vmc_study_run_sensitivity(const vmc_study* study,
                                             vmc_report** out);
VMC_API void vmc_report_free(vmc_report* report);

VMC_API const char* vmc_report_summary(const vmc_report* report);
VMC_API size_t vmc_report_file_count(const vmc_report* report);
VMC_API const char* vmc_report_file_name(const vmc_report* report,
                                         size_t index);
VMC_API const char* vmc_report_file_text(const vmc_report* report,
                                         size_t index);

/* Writes every report file into out_dir (created if needed). Either all
 * files are written or none remain. */
VMC_API vmc_status vmc_report_write(const vmc_report* report,
                                    const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif /* VESSELMC_H */
