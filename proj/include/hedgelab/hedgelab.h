// Copyright 2026 The hedgelab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to hedgelab: exponential-weights learners under delayed
 * feedback, the replicating BOLD baseline, regret bounds, and the
 * experiment harness.
 *
 * Conventions:
 *   - Every fallible call returns hl_status. On failure hl_last_error()
 *     returns a message owned by the library, valid until the next call on
 *     the same thread.
 *   - Objects are opaque handles created by *_create / hl_run_game and
 *     released by the matching *_free. Handles are not thread-safe; distinct
 *     handles may be used from distinct threads.
 *   - Rounds are 1-based. Loss matrices are row-major, one row of
 *     num_experts entries per round.
 */
#ifndef HEDGELAB_HEDGELAB_H_
#define HEDGELAB_HEDGELAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(HEDGELAB_BUILDING)
#define HL_API __declspec(dllexport)
#else
#define HL_API __declspec(dllimport)
#endif
#else
#define HL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hl_status {
  HL_OK = 0,
  HL_ERR_PARAMETER = 1,
  HL_ERR_BOUNDS = 2,
  HL_ERR_PROTOCOL = 3,
  HL_ERR_CAPACITY = 4,
  HL_ERR_PARSE = 5,
  HL_ERR_IO = 6,
  HL_ERR_CONFIG = 7,
  HL_ERR_INTERNAL = 8
} hl_status;

typedef enum hl_algorithm {
  HL_HEDGE = 0,
  HL_FIXED_SHARE = 1,
  HL_BOLD_HEDGE = 2,
  HL_BOLD_FIXED_SHARE = 3
} hl_algorithm;

typedef enum hl_eta_policy {
  HL_ETA_EXPLICIT = 0,
  /* (2/H) sqrt(2 ln N / T) */
  HL_ETA_AUTO13 = 1,
  /* (2/H) sqrt(2 ln N / (T (1 + E[D]))) */
  HL_ETA_AUTO14 = 2
} hl_eta_policy;

typedef struct hl_learner hl_learner;
typedef struct hl_trace hl_trace;

HL_API const char* hl_version(void);
HL_API const char* hl_last_error(void);
HL_API const char* hl_status_string(hl_status status);

/* ---- Online learners ---------------------------------------------------- */

/* algorithm must be HL_HEDGE or HL_FIXED_SHARE. prior may be NULL (uniform). */
HL_API hl_status hl_learner_create(hl_algorithm algorithm, size_t num_experts,
                                   const double* prior, double eta,
                                   double h_bound, hl_learner** out);
HL_API void hl_learner_free(hl_learner* learner);

/* Starts the next round and writes w_t. alpha is the Fixed Share switch
 * probability for this round; pass a negative value for 1/t. Hedge ignores
 * it. */
HL_API hl_status hl_learner_predict(hl_learner* learner, double alpha,
                                    double* weights, size_t num_experts);

/* Reveals `count` losses at the end of the current round. rounds[i] is the
 * round whose losses are in row i of `losses`. */
HL_API hl_status hl_learner_reveal(hl_learner* learner, const uint64_t* rounds,
                                   const double* losses, size_t count);

/* Number of rounds played so far. */
HL_API uint64_t hl_learner_round(const hl_learner* learner);

/* ---- Whole games -------------------------------------------------------- */

typedef struct hl_game_options {
  double h_bound;
  hl_eta_policy eta_policy;
  /* Used with HL_ETA_EXPLICIT. */
  double eta;
  /* Read by HL_ETA_AUTO14. */
  double expected_delay;
  /* NULL for uniform; otherwise num_experts entries. */
  const double* prior;
  /* Negative for alpha_t = 1/t, otherwise a constant in [0, 1]. */
  double alpha;
  int prune_memory;
} hl_game_options;

/* H = 1, auto14 with E[D] = 0, uniform prior, alpha_t = 1/t, no pruning. */
HL_API void hl_game_options_init(hl_game_options* options);

/* delays holds the raw D_t (clamped to t + D_t <= T); NULL means no delay. */
HL_API hl_status hl_run_game(hl_algorithm algorithm, const double* losses,
                             size_t horizon, size_t num_experts,
                             const int64_t* delays,
                             const hl_game_options* options, hl_trace** out);
HL_API void hl_trace_free(hl_trace* trace);
HL_API size_t hl_trace_horizon(const hl_trace* trace);
HL_API size_t hl_trace_num_experts(const hl_trace* trace);
HL_API double hl_trace_total_loss(const hl_trace* trace);
HL_API double hl_trace_eta(const hl_trace* trace);
HL_API hl_status hl_trace_weights(const hl_trace* trace, uint64_t t,
                                  double* weights, size_t num_experts);
/* h_1..h_T into out[0..T). */
HL_API hl_status hl_trace_round_losses(const hl_trace* trace, double* out,
                                       size_t horizon);
/* L_T^1..L_T^N into out[0..N). */
HL_API hl_status hl_trace_expert_losses(const hl_trace* trace, double* out,
                                        size_t num_experts);

/* ---- Rates, comparators and bounds -------------------------------------- */

HL_API hl_status hl_optimal_eta(double h_bound, size_t num_experts,
                                double length, double* out);
HL_API hl_status hl_eta_delayed(double h_bound, size_t num_experts,
                                double horizon, double expected_delay,
                                double* out);
HL_API hl_status hl_hedge_regret_bound(double eta, double h_bound,
                                       double horizon, double sum_delays,
                                       double num_experts, double* out);
HL_API hl_status hl_fs_regret_bound(double eta, double h_bound, double horizon,
                                    double sum_delays, double num_experts,
                                    double switches, double* out);
HL_API hl_status hl_mixloss(const double* weights, const double* losses,
                            size_t num_experts, double eta, double* out);
/* Least loss over sequences with at most max_switches switches. experts may
 * be NULL; otherwise it receives the 0-based sequence (horizon entries). */
HL_API hl_status hl_best_switching_sequence(const double* losses,
                                            size_t horizon, size_t num_experts,
                                            size_t max_switches,
                                            double* loss_out,
                                            size_t* experts);

/* ---- Experiment harness ------------------------------------------------- */

typedef struct hl_experiment_config {
  /* Comma-separated: hedge, fs, bold-hedge, bold-fs. */
  const char* algorithms;
  size_t num_experts;
  size_t horizon;
  /* iid:q1 | iid:q2 | iid:Q,... | switch:q2:k=10 | file:PATH */
  const char* loss;
  /* zero | fixed:D | poisson:L | file:PATH */
  const char* delay;
  /* auto14 | auto13 | VALUE */
  const char* eta;
  size_t replications;
  uint64_t seed;
  /* K of the switching comparator. */
  size_t switches;
  double h_bound;
  /* 0 = hardware concurrency; HEDGELAB_THREADS overrides. */
  size_t threads;
} hl_experiment_config;

HL_API void hl_experiment_config_init(hl_experiment_config* config);

/* Runs the sweep and writes the per-replication CSV to out_path ("-" for
 * stdout) and per-lambda means to summary_path (NULL derives
 * "<out>.summary.csv"; ignored when out_path is "-"). lambdas may be NULL. */
HL_API hl_status hl_run_sweep(const hl_experiment_config* config,
                              const double* lambdas, size_t lambda_count,
                              const char* out_path, const char* summary_path);

/* Writes `t,expert,weight` rows for rounds [t_start, t_end]. */
HL_API hl_status hl_write_weight_trace(const hl_experiment_config* config,
                                       uint64_t t_start, uint64_t t_end,
                                       const char* out_path);

typedef void (*hl_line_sink)(const char* line, void* user);

/* Runs a property suite ("oracle", "bounds", "lemmas", "all"), sending one
 * line per check to sink (may be NULL). *passed is set to 1 or 0. */
HL_API hl_status hl_verify(const char* suite, hl_line_sink sink, void* user,
                           int* passed);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* HEDGELAB_HEDGELAB_H_ */
