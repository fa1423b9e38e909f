/* Copyright 2025-2026 The compatrad developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of the compatrad library.
 *
 * Handles are opaque; every function returns a cr_status and reports
 * results through out-parameters. On a non-zero status the thread-local
 * message from cr_last_error() describes the failure. Strings returned
 * through char** out-parameters are heap-allocated and must be released
 * with cr_string_free().
 */

#ifndef COMPATRAD_H
#define COMPATRAD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cr_povm cr_povm;
typedef struct cr_assemblage cr_assemblage;
typedef struct cr_lhs_model cr_lhs_model;
typedef struct cr_search_result cr_search_result;

typedef enum cr_status {
    CR_OK = 0,
    CR_ERR_INVALID_POVM = 1,
    CR_ERR_DEGENERATE_POVM = 2,
    CR_ERR_OUT_OF_RANGE = 3,
    CR_ERR_TOO_FEW_EFFECTS = 4,
    CR_ERR_NOT_PLANAR = 5,
    CR_ERR_INFEASIBLE = 6,
    CR_ERR_INFEASIBLE_WEIGHTS = 7,
    CR_ERR_SAMPLING_STUCK = 8,
    CR_ERR_SHAPE_MISMATCH = 9,
    CR_ERR_INSUFFICIENT_DATA = 10,
    CR_ERR_UNSUPPORTED = 11,
    CR_ERR_BUDGET_EXHAUSTED = 12,
    CR_ERR_PARSE = 13,
    CR_ERR_INTERNAL = 14
} cr_status;

typedef struct cr_radius_result {
    double value;
    double witness_c0;
    double witness_c[3];
    /* 0 = facet_general, 1 = facet_planar, 2 = symmetric */
    int method;
} cr_radius_result;

const char *cr_version(void);

/* Thread-local message for the most recent failing call on this thread. */
const char *cr_last_error(void);

void cr_string_free(char *s);

/* ---- POVM construction and inspection ---- */

cr_status cr_povm_from_json(const char *json, cr_povm **out);
cr_status cr_povm_to_json(const cr_povm *povm, char **out_json);
void cr_povm_free(cr_povm *povm);

int cr_povm_outcomes(const cr_povm *povm);
int cr_povm_planar(const cr_povm *povm);

cr_status cr_povm_validate(const cr_povm *povm, double tol, int *out_valid,
                           char **out_report_json);
cr_status cr_povm_symmetric_extension(const cr_povm *povm, cr_povm **out);
cr_status cr_povm_rank1_reduce(const cr_povm *povm, cr_povm **out);

cr_status cr_povm_rotsym_planar(int n, cr_povm **out);
cr_status cr_povm_platonic(const char *kind, cr_povm **out);
cr_status cr_povm_thomson(int n, int restarts, uint64_t seed, int max_iters,
                          cr_povm **out, double *out_energy);
cr_status cr_sample_povm(int n, int planar, uint64_t seed, cr_povm **out);

/* ---- Compatibility radii ---- */

cr_status cr_compat_radius(const cr_povm *povm, cr_radius_result *out);
cr_status cr_compat_radius_sym(const cr_povm *povm, cr_radius_result *out);
cr_status cr_sampled_min(const cr_povm *povm, long grid_points, int c0_steps,
                         double *out);
cr_status cr_inradius_chain_check(const cr_povm *povm, double *out_r,
                                  double *out_r_sym, int *out_ok);

/* ---- Closed forms and analytic bounds ---- */

cr_status cr_rotsym_planar_radius(int n, double *out);
cr_status cr_planar_radius_upper(int n, double *out);
cr_status cr_planar_cost_bounds(double r, double *out_lower, double *out_upper);
cr_status cr_simplex_radius_cap(int n, int planar, double *out);
cr_status cr_fit_scaling_exponent(const double *r, const double *cost, int count,
                                  double beta, double *out);

/* ---- Werner assemblages and LHS models ---- */

/* settings_xyz holds num_settings unit vectors as x0,y0,z0,x1,y1,z1,... */
cr_status cr_werner_assemblage(double r, const double *settings_xyz,
                               int num_settings, cr_assemblage **out);
cr_status cr_assemblage_from_json(const char *json, cr_assemblage **out);
cr_status cr_assemblage_to_json(const cr_assemblage *assemblage, char **out_json);
void cr_assemblage_free(cr_assemblage *assemblage);

/* q_out must hold cr_povm_outcomes(povm) doubles. */
cr_status cr_decompose_child(const cr_povm *povm, const double target[3],
                             double *q_out);
/* p_out must hold n doubles. */
cr_status cr_planar_response(int n, double theta, double *p_out);

cr_status cr_build_lhs_werner(const cr_povm *parent, double r,
                              const double *settings_xyz, int num_settings,
                              cr_lhs_model **out);
cr_status cr_lhs_model_from_json(const char *json, cr_lhs_model **out);
cr_status cr_lhs_model_to_json(const cr_lhs_model *model, char **out_json);
cr_status cr_verify_lhs(const cr_lhs_model *model, const cr_assemblage *assemblage,
                        double tol, int *out_ok, double *out_max_dev);
/* Rebuilds the Werner assemblage for the model's own settings and verifies. */
cr_status cr_verify_lhs_werner(const cr_lhs_model *model, double r, double tol,
                               int *out_ok, double *out_max_dev);
void cr_lhs_model_free(cr_lhs_model *model);

/* ---- Radius search ---- */

cr_status cr_maximize_radius(int n, int planar, long samples, int refine_iters,
                             uint64_t seed, long time_budget_ms /* <0: none */,
                             cr_search_result **out);
cr_status cr_search_result_best(const cr_search_result *result, cr_povm **out_povm,
                                double *out_radius);
cr_status cr_search_result_to_json(const cr_search_result *result, char **out_json);
cr_status cr_search_result_history_csv(const cr_search_result *result,
                                       char **out_csv);
void cr_search_result_free(cr_search_result *result);

/* ---- Reference-table reproduction ---- */

cr_status cr_table2(uint64_t seed, long samples, int refine_iters, int run_search,
                    char **out_json, char **out_csv);
cr_status cr_table_platonic(char **out_json, char **out_csv);
cr_status cr_table1_thresholds(uint64_t seed, char **out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* COMPATRAD_H */
