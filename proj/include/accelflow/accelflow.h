#ifndef ACCELFLOW_H
#define ACCELFLOW_H

#include <stddef.h>
#include <stdint.h>

#if defined(ACCELFLOW_BUILDING_LIBRARY)
#define AF_API __attribute__((visibility("default")))
#else
#define AF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum af_status {
    AF_OK = 0,
    AF_ERR_ARGUMENT = 1,
    AF_ERR_SCHEDULE = 2,
    AF_ERR_CAPABILITY = 3,
    AF_ERR_DOMAIN = 4,
    AF_ERR_DIVERGENCE = 5,
    AF_ERR_CONFIG_PARSE = 6,
    AF_ERR_CONFIG_SCHEMA = 7,
    AF_ERR_FILE_NOT_FOUND = 8,
    AF_ERR_IO = 9,
    AF_ERR_INTERNAL = 10
} af_status;

typedef struct af_problem af_problem;
typedef struct af_trajectory af_trajectory;
typedef struct af_experiment af_experiment;

AF_API const char* af_version(void);
AF_API const char* af_status_name(af_status status);

/* Message of the last failing call on this thread ("" if none). */
AF_API const char* af_last_error(void);
/* Line of the last config parse error on this thread, 0 otherwise. */
AF_API int af_last_error_line(void);

/* kind: "paper2d", "restart2d" or "randquad" (n and seed only used by randquad). */
AF_API af_status af_problem_create(const char* kind, int n, double mu, double L, uint64_t seed, af_problem** out);
AF_API void af_problem_destroy(af_problem* problem);
AF_API int af_problem_dim(const af_problem* problem);
AF_API af_status af_problem_value(const af_problem* problem, const double* x, double* out);
AF_API af_status af_problem_gradient(const af_problem* problem, const double* x, double* out);

/* Integrates a catalog flow (e.g. "ODE-C") from X(0) = x0 for `steps` samples of width h. */
AF_API af_status af_simulate(const af_problem* problem, const char* model, const double* x0, double h, int steps,
                             double eps, int substeps, af_trajectory** out);
/* Runs "NAG-C", "NAG-SC", "NAG-C-C" or "NAG-SC-C". */
AF_API af_status af_run_nag(const af_problem* problem, const char* variant, const double* x0, double h, int steps,
                            double eps, af_trajectory** out);
/* Constant-step restart run, scheme "ours", "su" or "none". */
AF_API af_status af_run_restart(const af_problem* problem, const char* scheme, const double* x0, int k_min, int steps,
                                af_trajectory** out);

AF_API void af_trajectory_destroy(af_trajectory* traj);
AF_API size_t af_trajectory_size(const af_trajectory* traj);
AF_API int af_trajectory_dim(const af_trajectory* traj);
/* x may be NULL; otherwise it receives dim values. */
AF_API af_status af_trajectory_sample(const af_trajectory* traj, size_t index, double* t, double* x, double* f);
AF_API af_status af_trajectory_write_csv(const af_trajectory* traj, const char* path);

/* id: EXP1..EXP6, "simulate", "nag" or "suite". */
AF_API af_status af_experiment_create(const char* id, af_experiment** out);
AF_API af_status af_experiment_load(const char* config_path, af_experiment** out);
AF_API void af_experiment_destroy(af_experiment* exp);
/* Keys: h, mu, L, eps, s. */
AF_API af_status af_experiment_set_double(af_experiment* exp, const char* key, double value);
/* Keys: k_max, k_min, seed, n, substeps. */
AF_API af_status af_experiment_set_int(af_experiment* exp, const char* key, int64_t value);
/* Keys: experiment, problem, out. */
AF_API af_status af_experiment_set_string(af_experiment* exp, const char* key, const char* value);
AF_API af_status af_experiment_add_model(af_experiment* exp, const char* name);
/* Effective value; mu falls back to the experiment default when unset. */
AF_API af_status af_experiment_get_double(const af_experiment* exp, const char* key, double* out);
AF_API const char* af_experiment_get_string(const af_experiment* exp, const char* key);
AF_API af_status af_experiment_validate(const af_experiment* exp);
/* *all_diverged is set to 1 when every requested model diverged. */
AF_API af_status af_experiment_run(af_experiment* exp, int* all_diverged);
AF_API size_t af_experiment_manifest_size(const af_experiment* exp);
AF_API const char* af_experiment_manifest_line(const af_experiment* exp, size_t index);
AF_API size_t af_experiment_summary_size(const af_experiment* exp);
AF_API const char* af_experiment_summary_line(const af_experiment* exp, size_t index);

#ifdef __cplusplus
}
#endif

#endif
