// Copyright 2025-2026 The compatrad developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// C language binding: thin translation layer over the C++ core. Handles
// own their C++ objects; errors surface as status codes with a
// thread-local message.

#include "compatrad.h"

#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>

#include "core/bounds.hpp"
#include "core/constructions.hpp"
#include "core/geometry.hpp"
#include "core/json_io.hpp"
#include "core/lhs.hpp"
#include "core/povm.hpp"
#include "core/radius.hpp"
#include "core/search.hpp"
#include "core/tables.hpp"

using namespace compatrad;

struct cr_povm {
    QubitPOVM value;
};
struct cr_assemblage {
    Assemblage value;
};
struct cr_lhs_model {
    LHSModel value;
};
struct cr_search_result {
    SearchResult value;
    int n = 0;
    bool planar = false;
};

namespace {

thread_local std::string g_last_error;

cr_status map_code(ErrorCode code) {
    switch (code) {
    case ErrorCode::invalid_povm:
        return CR_ERR_INVALID_POVM;
    case ErrorCode::degenerate_povm:
        return CR_ERR_DEGENERATE_POVM;
    case ErrorCode::out_of_range:
        return CR_ERR_OUT_OF_RANGE;
    case ErrorCode::too_few_effects:
        return CR_ERR_TOO_FEW_EFFECTS;
    case ErrorCode::not_planar:
        return CR_ERR_NOT_PLANAR;
    case ErrorCode::infeasible:
        return CR_ERR_INFEASIBLE;
    case ErrorCode::infeasible_weights:
        return CR_ERR_INFEASIBLE_WEIGHTS;
    case ErrorCode::sampling_stuck:
        return CR_ERR_SAMPLING_STUCK;
    case ErrorCode::shape_mismatch:
        return CR_ERR_SHAPE_MISMATCH;
    case ErrorCode::insufficient_data:
        return CR_ERR_INSUFFICIENT_DATA;
    case ErrorCode::unsupported:
        return CR_ERR_UNSUPPORTED;
    case ErrorCode::budget_exhausted:
        return CR_ERR_BUDGET_EXHAUSTED;
    case ErrorCode::parse_error:
        return CR_ERR_PARSE;
    case ErrorCode::internal:
        return CR_ERR_INTERNAL;
    }
    return CR_ERR_INTERNAL;
}

template <typename Fn> cr_status guarded(Fn &&fn) {
    try {
        fn();
        return CR_OK;
    } catch (const Error &e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::bad_alloc &) {
        g_last_error = "out of memory";
        return CR_ERR_INTERNAL;
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return CR_ERR_PARSE;
    }
}

char *dup_string(const std::string &s) {
    char *out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void fill_radius(const RadiusResult &r, cr_radius_result *out) {
    out->value = r.value;
    out->witness_c0 = r.witness_c0;
    out->witness_c[0] = r.witness_c.x;
    out->witness_c[1] = r.witness_c.y;
    out->witness_c[2] = r.witness_c.z;
    out->method = static_cast<int>(r.method);
}

std::vector<Vec3> settings_from_array(const double *xyz, int count) {
    if (count < 0 || (count > 0 && xyz == nullptr))
        throw Error(ErrorCode::out_of_range, "bad settings array");
    std::vector<Vec3> settings(count);
    for (int i = 0; i < count; ++i)
        settings[i] = {xyz[3 * i], xyz[3 * i + 1], xyz[3 * i + 2]};
    return settings;
}

} // namespace

extern "C" {

const char *cr_version(void) { return "0.1.0"; }

const char *cr_last_error(void) { return g_last_error.c_str(); }

void cr_string_free(char *s) { delete[] s; }

cr_status cr_povm_from_json(const char *json, cr_povm **out) {
    return guarded([&] {
        if (!json || !out)
            throw Error(ErrorCode::out_of_range, "null argument");
        *out = new cr_povm{povm_from_json(json)};
    });
}

cr_status cr_povm_to_json(const cr_povm *povm, char **out_json) {
    return guarded([&] {
        if (!povm || !out_json)
            throw Error(ErrorCode::out_of_range, "null argument");
        *out_json = dup_string(povm_to_json(povm->value));
    });
}

void cr_povm_free(cr_povm *povm) { delete povm; }

int cr_povm_outcomes(const cr_povm *povm) {
    return povm ? povm->value.outcomes() : 0;
}

int cr_povm_planar(const cr_povm *povm) {
    return povm && povm->value.planar ? 1 : 0;
}

cr_status cr_povm_validate(const cr_povm *povm, double tol, int *out_valid,
                           char **out_report_json) {
    return guarded([&] {
        if (!povm || !out_valid)
            throw Error(ErrorCode::out_of_range, "null argument");
        const auto report = validate_povm(povm->value, tol > 0 ? tol : kPovmTol);
        *out_valid = report.valid ? 1 : 0;
        if (out_report_json)
            *out_report_json = dup_string(validation_report_to_json(report));
    });
}

cr_status cr_povm_symmetric_extension(const cr_povm *povm, cr_povm **out) {
    return guarded([&] {
        if (!povm || !out)
            throw Error(ErrorCode::out_of_range, "null argument");
        *out = new cr_povm{symmetric_extension(povm->value)};
    });
}

cr_status cr_povm_rank1_reduce(const cr_povm *povm, cr_povm **out) {
    return guarded([&] {
        if (!povm || !out)
            throw Error(ErrorCode::out_of_range, "null argument");
        *out = new cr_povm{rank1_reduce(povm->value)};
    });
}

cr_status cr_povm_rotsym_planar(int n, cr_povm **out) {
    return guarded([&] {
        if (!out)
            throw Error(ErrorCode::out_of_range, "null argument");
        *out = new cr_povm{rotsym_planar(n)};
    });
}

cr_status cr_povm_platonic(const char *kind, cr_povm **out) {
    return guarded([&] {
        if (!kind || !out)
            throw Error(ErrorCode::out_of_range, "null argument");
        *out = new cr_povm{platonic(platonic_from_name(kind))};
    });
}

cr_status cr_povm_thomson(int n, int restarts, uint64_t seed, int max_iters,
                          cr_povm **out, double *out_energy) {
    return guarded([&] {
        if (!out)
            throw Error(ErrorCode::out_of_range, "null argument");
        ThomsonConfig cfg;
        cfg.n = n;
        cfg.restarts = restarts > 0 ? restarts : 50;
        cfg.seed = seed;
        cfg.max_iters = max_iters > 0 ? max_iters : 5000;
        const auto result = thomson_detailed(cfg);
        *out = new cr_povm{result.povm};
        if (out_energy)
            *out_energy = result.energy;
    });
}

cr_status cr_sample_povm(int n, int planar, uint64_t seed, cr_povm **out) {
    return guarded([&] {
        if (!out)
            throw Error(ErrorCode::out_of_range, "null argument");
        *out = new cr_povm{sample_povm(n, planar != 0, seed)};
    });
}

cr_status cr_compat_radius(const cr_povm *povm, cr_radius_result *out) {
    return guarded([&] {
        if (!povm || !out)
            throw Error(ErrorCode::out_of_range, "null argument");
        fill_radius(compat_radius(povm->value), out);
    });
}

cr_status cr_compat_radius_sym(const cr_povm *povm, cr_radius_result *out) {
    return guarded([&] {
        if (!povm || !out)
            throw Error(ErrorCode::out_of_range, "null argument");
        fill_radius(compat_radius_sym(povm->value), out);
    });
}

cr_status cr_sampled_min(const cr_povm *povm, long grid_points, int c0_steps,
                         double *out) {
    return guarded([&] {
        if (!povm || !out)
            throw Error(ErrorCode::out_of_range, "null argument");
        OracleConfig cfg;
        if (grid_points > 0)
            cfg.grid_points = grid_points;
        if (c0_steps > 0)
            cfg.c0_steps = c0_steps;
        *out = sampled_min(povm->value, cfg);
    });
}

cr_status cr_inradius_chain_check(const cr_povm *povm, double *out_r,
                                  double *out_r_sym, int *out_ok) {
    return guarded([&] {
        if (!povm || !out_r || !out_r_sym || !out_ok)
            throw Error(ErrorCode::out_of_range, "null argument");
        const auto chain = inradius_chain_check(povm->value);
        *out_r = chain.r;
        *out_r_sym = chain.r_sym;
        *out_ok = chain.ok ? 1 : 0;
    });
}

cr_status cr_rotsym_planar_radius(int n, double *out) {
    return guarded([&] {
        if (!out)
            throw Error(ErrorCode::out_of_range, "null argument");
        *out = rotsym_planar_radius_closed_form(n);
    });
}

cr_status cr_planar_radius_upper(int n, double *out) {
    return guarded([&] {
        if (!out)
            throw Error(ErrorCode::out_of_range, "null argument");
        *out = planar_radius_upper(n);
    });
}

cr_status cr_planar_cost_bounds(double r, double *out_lower, double *out_upper) {
    return guarded([&] {
        if (!out_lower || !out_upper)
            throw Error(ErrorCode::out_of_range, "null argument");
        const auto [lower, upper] = planar_cost_bounds(r);
        *out_lower = lower;
        *out_upper = upper;
    });
}

cr_status cr_simplex_radius_cap(int n, int planar, double *out) {
    return guarded([&] {
        if (!out)
            throw Error(ErrorCode::out_of_range, "null argument");
        *out = simplex_radius_cap(n, planar != 0);
    });
}

cr_status cr_fit_scaling_exponent(const double *r, const double *cost, int count,
                                  double beta, double *out) {
    return guarded([&] {
        if (!r || !cost || !out)
            throw Error(ErrorCode::out_of_range, "null argument");
        std::vector<CostPoint> points(count);
        for (int i = 0; i < count; ++i)
            points[i] = {r[i], cost[i]};
        *out = fit_scaling_exponent(points, beta);
    });
}

cr_status cr_werner_assemblage(double r, const double *settings_xyz,
                               int num_settings, cr_assemblage **out) {
    return guarded([&] {
        if (!out)
            throw Error(ErrorCode::out_of_range, "null argument");
        *out = new cr_assemblage{
            werner_assemblage(r, settings_from_array(settings_xyz, num_settings))};
    });
}

cr_status cr_assemblage_from_json(const char *json, cr_assemblage **out) {
    return guarded([&] {
        if (!json || !out)
            throw Error(ErrorCode::out_of_range, "null argument");
        *out = new cr_assemblage{assemblage_from_json(json)};
    });
}

cr_status cr_assemblage_to_json(const cr_assemblage *assemblage, char **out_json) {
    return guarded([&] {
        if (!assemblage || !out_json)
            throw Error(ErrorCode::out_of_range, "null argument");
        *out_json = dup_string(assemblage_to_json(assemblage->value));
    });
}

void cr_assemblage_free(cr_assemblage *assemblage) { delete assemblage; }

cr_status cr_decompose_child(const cr_povm *povm, const double target[3],
                             double *q_out) {
    return guarded([&] {
        if (!povm || !target || !q_out)
            throw Error(ErrorCode::out_of_range, "null argument");
        const auto d =
            decompose_child(povm->value, {target[0], target[1], target[2]});
        for (std::size_t i = 0; i < d.q.size(); ++i)
            q_out[i] = d.q[i];
    });
}

cr_status cr_planar_response(int n, double theta, double *p_out) {
    return guarded([&] {
        if (!p_out)
            throw Error(ErrorCode::out_of_range, "null argument");
        const auto p = planar_response(n, theta);
        for (std::size_t i = 0; i < p.size(); ++i)
            p_out[i] = p[i];
    });
}

cr_status cr_build_lhs_werner(const cr_povm *parent, double r,
                              const double *settings_xyz, int num_settings,
                              cr_lhs_model **out) {
    return guarded([&] {
        if (!parent || !out)
            throw Error(ErrorCode::out_of_range, "null argument");
        *out = new cr_lhs_model{build_lhs_werner(
            parent->value, r, settings_from_array(settings_xyz, num_settings))};
    });
}

cr_status cr_lhs_model_from_json(const char *json, cr_lhs_model **out) {
    return guarded([&] {
        if (!json || !out)
            throw Error(ErrorCode::out_of_range, "null argument");
        *out = new cr_lhs_model{lhs_model_from_json(json)};
    });
}

cr_status cr_lhs_model_to_json(const cr_lhs_model *model, char **out_json) {
    return guarded([&] {
        if (!model || !out_json)
            throw Error(ErrorCode::out_of_range, "null argument");
        *out_json = dup_string(lhs_model_to_json(model->value));
    });
}

cr_status cr_verify_lhs(const cr_lhs_model *model, const cr_assemblage *assemblage,
                        double tol, int *out_ok, double *out_max_dev) {
    return guarded([&] {
        if (!model || !assemblage || !out_ok || !out_max_dev)
            throw Error(ErrorCode::out_of_range, "null argument");
        const auto check = verify_lhs(model->value, assemblage->value, tol);
        *out_ok = check.ok ? 1 : 0;
        *out_max_dev = check.max_dev;
    });
}

cr_status cr_verify_lhs_werner(const cr_lhs_model *model, double r, double tol,
                               int *out_ok, double *out_max_dev) {
    return guarded([&] {
        if (!model || !out_ok || !out_max_dev)
            throw Error(ErrorCode::out_of_range, "null argument");
        const auto assemblage = werner_assemblage(r, model->value.settings);
        const auto check = verify_lhs(model->value, assemblage, tol);
        *out_ok = check.ok ? 1 : 0;
        *out_max_dev = check.max_dev;
    });
}

void cr_lhs_model_free(cr_lhs_model *model) { delete model; }

cr_status cr_maximize_radius(int n, int planar, long samples, int refine_iters,
                             uint64_t seed, long time_budget_ms,
                             cr_search_result **out) {
    return guarded([&] {
        if (!out)
            throw Error(ErrorCode::out_of_range, "null argument");
        SearchConfig cfg;
        cfg.n = n;
        cfg.planar = planar != 0;
        cfg.samples = samples;
        cfg.refine_iters = refine_iters;
        cfg.seed = seed;
        if (time_budget_ms >= 0)
            cfg.time_budget_ms = time_budget_ms;
        auto *result = new cr_search_result{maximize_radius(cfg), n, planar != 0};
        *out = result;
    });
}

cr_status cr_search_result_best(const cr_search_result *result, cr_povm **out_povm,
                                double *out_radius) {
    return guarded([&] {
        if (!result)
            throw Error(ErrorCode::out_of_range, "null argument");
        if (out_povm)
            *out_povm = new cr_povm{result->value.best_povm};
        if (out_radius)
            *out_radius = result->value.best_radius;
    });
}

cr_status cr_search_result_to_json(const cr_search_result *result,
                                   char **out_json) {
    return guarded([&] {
        if (!result || !out_json)
            throw Error(ErrorCode::out_of_range, "null argument");
        *out_json = dup_string(
            search_result_to_json(result->value, result->n, result->planar));
    });
}

cr_status cr_search_result_history_csv(const cr_search_result *result,
                                       char **out_csv) {
    return guarded([&] {
        if (!result || !out_csv)
            throw Error(ErrorCode::out_of_range, "null argument");
        std::ostringstream os;
        os << "iteration,radius\n";
        char buf[32];
        for (const auto &[iter, radius] : result->value.history) {
            std::snprintf(buf, sizeof(buf), "%.17g", radius);
            os << iter << ',' << buf << '\n';
        }
        *out_csv = dup_string(os.str());
    });
}

void cr_search_result_free(cr_search_result *result) { delete result; }

cr_status cr_table2(uint64_t seed, long samples, int refine_iters, int run_search,
                    char **out_json, char **out_csv) {
    return guarded([&] {
        Table2Options options;
        options.seed = seed;
        if (samples > 0)
            options.samples = samples;
        if (refine_iters > 0)
            options.refine_iters = refine_iters;
        options.run_search = run_search != 0;
        const auto rows = reproduce_table2(options);
        if (out_json)
            *out_json = dup_string(table2_to_json(rows));
        if (out_csv)
            *out_csv = dup_string(table2_to_csv(rows));
    });
}

cr_status cr_table_platonic(char **out_json, char **out_csv) {
    return guarded([&] {
        const auto rows = reproduce_platonic();
        if (out_json)
            *out_json = dup_string(platonic_to_json(rows));
        if (out_csv)
            *out_csv = dup_string(platonic_to_csv(rows));
    });
}

cr_status cr_table1_thresholds(uint64_t seed, char **out_json) {
    return guarded([&] {
        if (!out_json)
            throw Error(ErrorCode::out_of_range, "null argument");
        *out_json = dup_string(table1_thresholds_json(seed));
    });
}

} // extern "C"
