/* C interface to the MBQC path-finding and timing emulator. */
#ifndef MBQC_MBQC_H
#define MBQC_MBQC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MBQC_BUILDING)
#    define MBQC_API __declspec(dllexport)
#  else
#    define MBQC_API __declspec(dllimport)
#  endif
#else
#  define MBQC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mbqc_status {
    MBQC_OK = 0,
    MBQC_ERR_INVALID_ARGUMENT = 1, /* null handle or malformed argument */
    MBQC_ERR_CONFIG = 2,           /* configuration fails validation */
    MBQC_ERR_PARSE = 3,            /* malformed list or CSV input */
    MBQC_ERR_NOT_FOUND = 4,        /* search finished without a result */
    MBQC_ERR_INTERNAL = 5
} mbqc_status;

typedef struct mbqc_config mbqc_config;
typedef struct mbqc_trial mbqc_trial;
typedef struct mbqc_buffer mbqc_buffer;

MBQC_API const char *mbqc_version(void);
/* Message of the last failed call on this thread; "" if none. */
MBQC_API const char *mbqc_last_error(void);
MBQC_API const char *mbqc_status_string(mbqc_status status);

/* Owned text returned by the library. */
MBQC_API const char *mbqc_buffer_data(const mbqc_buffer *buf);
MBQC_API size_t mbqc_buffer_size(const mbqc_buffer *buf);
MBQC_API void mbqc_buffer_destroy(mbqc_buffer *buf);

/* Defaults: gbfs, loose path rules, H=20, B=5, W=2000, p=0.75, 1000 reps,
   T_p = 1 ns, random outcomes, no trace. */
MBQC_API mbqc_status mbqc_config_create(mbqc_config **out);
MBQC_API void mbqc_config_destroy(mbqc_config *cfg);
MBQC_API mbqc_status mbqc_config_set_algorithm(mbqc_config *cfg, const char *name);
MBQC_API mbqc_status mbqc_config_set_path_rules(mbqc_config *cfg, const char *name);
MBQC_API mbqc_status mbqc_config_set_height(mbqc_config *cfg, int height);
MBQC_API mbqc_status mbqc_config_set_block_width(mbqc_config *cfg, int block_width);
MBQC_API mbqc_status mbqc_config_set_width(mbqc_config *cfg, int64_t width);
MBQC_API mbqc_status mbqc_config_set_p(mbqc_config *cfg, double p);
MBQC_API mbqc_status mbqc_config_set_reps(mbqc_config *cfg, int reps);
MBQC_API mbqc_status mbqc_config_set_seed(mbqc_config *cfg, uint64_t master_seed);
MBQC_API mbqc_status mbqc_config_set_clock_period_ns(mbqc_config *cfg, double ns);
MBQC_API mbqc_status mbqc_config_set_zero_outcomes(mbqc_config *cfg, int enabled);
MBQC_API mbqc_status mbqc_config_set_trace(mbqc_config *cfg, int enabled);
MBQC_API mbqc_status mbqc_config_validate(const mbqc_config *cfg);

/* Seed of trial `index` under master seed `master`. */
MBQC_API uint64_t mbqc_trial_seed(uint64_t master, uint64_t index);

MBQC_API mbqc_status mbqc_run_trial(const mbqc_config *cfg, uint64_t seed, mbqc_trial **out);
MBQC_API void mbqc_trial_destroy(mbqc_trial *trial);
MBQC_API int64_t mbqc_trial_depth(const mbqc_trial *trial);
/* "reached_end", "no_right_node" or "search_death". */
MBQC_API const char *mbqc_trial_termination(const mbqc_trial *trial);
MBQC_API size_t mbqc_trial_cycles(const mbqc_trial *trial);
/* Predecessor writes of one cycle; cycle 0 is the warm-up search. */
MBQC_API uint64_t mbqc_trial_pred_writes(const mbqc_trial *trial, size_t cycle);
MBQC_API const char *mbqc_trial_trace(const mbqc_trial *trial);

/* cfg.reps trials, one CSV row each:
   trial,seed,alg,p,B,H,W,depth,termination,cycles,mean_pred_writes,max_pred_writes */
MBQC_API mbqc_status mbqc_run_trials_csv(const mbqc_config *cfg, mbqc_buffer **csv);

/* Grid sweep. Lists are "a,b,c" or "start:stop:step"; algorithms "gbfs,ibfs".
   CSV header: alg,p,B,H,W,reps,mean_depth,mean_pred_writes,max_pred_writes */
MBQC_API mbqc_status mbqc_sweep(const mbqc_config *cfg, const char *algorithms, const char *ps,
                                const char *block_widths, mbqc_buffer **csv);

/* First of `max_seeds` seeds where IBFS stops short of GBFS on the same lattice.
   Writes a summary line followed by the IBFS per-cycle trace.
   MBQC_ERR_NOT_FOUND if there is none. */
MBQC_API mbqc_status mbqc_find_failure(const mbqc_config *cfg, uint64_t max_seeds,
                                       mbqc_buffer **report);

/* Durations in picoseconds. */
MBQC_API mbqc_status mbqc_write_time_bound_ps(double clock_period_ps, double pred_writes,
                                              double *out);
MBQC_API mbqc_status mbqc_gbfs_asymptotic_bound_ps(double clock_period_ps, int block_width,
                                                   int height, double *out);
MBQC_API mbqc_status mbqc_clock_floor_ps(double write_time_ps, double pred_writes, double *out);
/* Sweep CSV in, timing CSV out (times in seconds):
   algorithm,p,B,H,T_p,W_pred_mean,W_pred_max,t_write */
MBQC_API mbqc_status mbqc_timing_from_sweep_csv(const char *sweep_csv, double clock_period_ns,
                                                mbqc_buffer **csv);

/* Statevector run of cfg.reps trials of cfg.width columns per sigma.
   angles: "identity" or "random". `survival` may be NULL.
   csv: sigma,elapsed_ns,mean_fidelity   survival: sigma,elapsed_ns,survivors,stddev */
MBQC_API mbqc_status mbqc_esim(const mbqc_config *cfg, const char *sigmas, const char *angles,
                               double v_pi, mbqc_buffer **csv, mbqc_buffer **survival);

#ifdef __cplusplus
}
#endif

#endif /* MBQC_MBQC_H */
