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

// compatrad command line front end. Computation happens in the shared
// library behind the C API; this file only parses arguments, moves JSON
// between files and the API, and maps statuses to exit codes:
//   0 success, 2 validation failure, 3 infeasibility, 4 budget exhausted.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "compatrad.h"

namespace {

int exit_code_for(cr_status status) {
    switch (status) {
    case CR_OK:
        return 0;
    case CR_ERR_INVALID_POVM:
    case CR_ERR_OUT_OF_RANGE:
    case CR_ERR_TOO_FEW_EFFECTS:
    case CR_ERR_NOT_PLANAR:
    case CR_ERR_SHAPE_MISMATCH:
    case CR_ERR_PARSE:
        return 2;
    case CR_ERR_INFEASIBLE:
    case CR_ERR_INFEASIBLE_WEIGHTS:
        return 3;
    case CR_ERR_SAMPLING_STUCK:
    case CR_ERR_BUDGET_EXHAUSTED:
        return 4;
    default:
        return 1;
    }
}

[[noreturn]] void fail(cr_status status) {
    std::cerr << "error: " << cr_last_error() << "\n";
    std::exit(exit_code_for(status));
}

void check(cr_status status) {
    if (status != CR_OK)
        fail(status);
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(2);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        std::exit(2);
    }
    out << text;
}

struct OwnedString {
    char *ptr = nullptr;
    ~OwnedString() { cr_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

struct OwnedPovm {
    cr_povm *ptr = nullptr;
    ~OwnedPovm() { cr_povm_free(ptr); }
};

OwnedPovm load_povm(const std::string &path) {
    OwnedPovm povm;
    check(cr_povm_from_json(read_file(path).c_str(), &povm.ptr));
    return povm;
}

std::vector<double> load_settings(const std::string &path) {
    // settings file: {"settings":[[x,y,z],...]}
    const std::string text = read_file(path);
    std::vector<double> flat;
    // Minimal extraction without pulling a JSON dependency into the CLI:
    // the file format is fixed, so scan the numeric triples.
    std::istringstream in(text);
    char ch;
    std::string token;
    while (in.get(ch)) {
        if ((ch >= '0' && ch <= '9') || ch == '-' || ch == '+' || ch == '.' ||
            ch == 'e' || ch == 'E') {
            token += ch;
        } else if (!token.empty()) {
            try {
                flat.push_back(std::stod(token));
            } catch (...) {
            }
            token.clear();
        }
    }
    if (!token.empty())
        flat.push_back(std::stod(token));
    if (flat.size() % 3 != 0 || flat.empty()) {
        std::cerr << "error: settings file must contain unit vectors as "
                     "[[x,y,z],...]\n";
        std::exit(2);
    }
    return flat;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"compatibility radii, parent POVM constructions, and "
                 "local-hidden-state models for two-qubit Werner states"};
    app.require_subcommand(1);

    // ---- radius ----
    std::string radius_povm, radius_out;
    bool radius_sym = false;
    long radius_oracle = 0;
    int radius_c0_steps = 33;
    auto *cmd_radius =
        app.add_subcommand("radius", "compatibility radius of a POVM file");
    cmd_radius->add_option("--povm", radius_povm, "POVM JSON file")->required();
    cmd_radius->add_flag("--sym", radius_sym, "radius of the symmetrized POVM");
    cmd_radius->add_option("--oracle", radius_oracle,
                           "also run the sampled oracle with this many grid points");
    cmd_radius->add_option("--c0-steps", radius_c0_steps, "oracle c0 grid size");
    cmd_radius->add_option("--out", radius_out, "write JSON here instead of stdout");

    // ---- construct ----
    auto *cmd_construct = app.add_subcommand("construct", "named parent POVMs");
    cmd_construct->require_subcommand(1);
    int rotsym_n = 4;
    std::string construct_out;
    auto *cmd_rotsym =
        cmd_construct->add_subcommand("rotsym", "rotationally symmetric planar POVM");
    cmd_rotsym->add_option("--n", rotsym_n, "outcome count (>= 2)")->required();
    cmd_rotsym->add_option("--out", construct_out, "output POVM JSON file");
    std::string platonic_kind = "tetrahedron";
    auto *cmd_platonic_c =
        cmd_construct->add_subcommand("platonic", "platonic-solid POVM");
    cmd_platonic_c
        ->add_option("--kind", platonic_kind,
                     "tetrahedron|octahedron|cube|icosahedron|dodecahedron")
        ->required();
    cmd_platonic_c->add_option("--out", construct_out, "output POVM JSON file");
    int thomson_n = 4, thomson_restarts = 50, thomson_iters = 5000;
    std::uint64_t thomson_seed = 0;
    auto *cmd_thomson =
        cmd_construct->add_subcommand("thomson", "minimal-energy point POVM");
    cmd_thomson->add_option("--n", thomson_n, "outcome count (>= 4)")->required();
    cmd_thomson->add_option("--restarts", thomson_restarts, "descent restarts");
    cmd_thomson->add_option("--seed", thomson_seed, "random seed");
    cmd_thomson->add_option("--max-iters", thomson_iters, "descent iterations");
    cmd_thomson->add_option("--out", construct_out, "output POVM JSON file");

    // ---- search ----
    int search_n = 4, search_refine = 200;
    long search_samples = 1000, search_budget = -1;
    std::uint64_t search_seed = 0;
    bool search_planar = false;
    std::string search_out, search_history;
    auto *cmd_search =
        app.add_subcommand("search", "maximize the radius over random parents");
    cmd_search->add_option("--n", search_n, "outcome count")->required();
    cmd_search->add_flag("--planar", search_planar, "restrict to the x-z plane");
    cmd_search->add_option("--samples", search_samples, "random starts");
    cmd_search->add_option("--refine", search_refine, "refinement rounds per start");
    cmd_search->add_option("--seed", search_seed, "random seed (default 0)");
    cmd_search->add_option("--time-budget", search_budget, "time budget in ms");
    cmd_search->add_option("--out", search_out, "result JSON file");
    cmd_search->add_option("--history", search_history, "history CSV file");

    // ---- lhs ----
    auto *cmd_lhs = app.add_subcommand("lhs", "local-hidden-state models");
    cmd_lhs->require_subcommand(1);
    std::string lhs_parent, lhs_settings, lhs_out, lhs_model;
    double lhs_r = 0.0, lhs_tol = 1e-9;
    auto *cmd_lhs_build =
        cmd_lhs->add_subcommand("build", "build a Werner-state LHS model");
    cmd_lhs_build->add_option("--parent", lhs_parent, "parent POVM JSON")->required();
    cmd_lhs_build->add_option("--r", lhs_r, "Werner noise parameter")->required();
    cmd_lhs_build->add_option("--settings", lhs_settings, "settings JSON")->required();
    cmd_lhs_build->add_option("--out", lhs_out, "model JSON file");
    auto *cmd_lhs_verify =
        cmd_lhs->add_subcommand("verify", "verify a model against the assemblage");
    cmd_lhs_verify->add_option("--model", lhs_model, "model JSON file")->required();
    cmd_lhs_verify->add_option("--r", lhs_r, "Werner noise parameter")->required();
    cmd_lhs_verify->add_option("--tol", lhs_tol, "tolerance (default 1e-9)");

    // ---- tables ----
    std::uint64_t table_seed = 0;
    long table_samples = 500;
    int table_refine = 100;
    bool table_no_search = false;
    std::string table_out, table_format = "csv";
    auto *cmd_table2 =
        app.add_subcommand("table2", "radii table: constructions vs references");
    cmd_table2->add_option("--seed", table_seed, "random seed (default 0)");
    cmd_table2->add_option("--samples", table_samples, "search samples per row");
    cmd_table2->add_option("--refine", table_refine, "search refinement rounds");
    cmd_table2->add_flag("--no-search", table_no_search,
                         "skip the budget-heavy numeric columns");
    cmd_table2->add_option("--out", table_out, "output file");
    cmd_table2->add_option("--format", table_format, "csv or json");

    std::string platonic_out, platonic_format = "csv";
    auto *cmd_platonic = app.add_subcommand(
        "platonic", "platonic radii vs closed forms and references");
    cmd_platonic->add_option("--out", platonic_out, "output file");
    cmd_platonic->add_option("--format", platonic_format, "csv or json");

    std::uint64_t t1_seed = 0;
    std::string t1_out;
    auto *cmd_table1 = app.add_subcommand(
        "table1", "demonstrate the Werner simulation-cost thresholds");
    cmd_table1->add_option("--seed", t1_seed, "random seed (default 0)");
    cmd_table1->add_option("--out", t1_out, "output file");

    CLI11_PARSE(app, argc, argv);

    if (cmd_radius->parsed()) {
        auto povm = load_povm(radius_povm);
        cr_radius_result result;
        check(radius_sym ? cr_compat_radius_sym(povm.ptr, &result)
                         : cr_compat_radius(povm.ptr, &result));
        std::ostringstream os;
        char buf[512];
        const char *method = result.method == 0   ? "facet_general"
                             : result.method == 1 ? "facet_planar"
                                                  : "symmetric";
        std::snprintf(buf, sizeof(buf),
                      "{\"value\":%.17g,\"witness_c0\":%.17g,\"witness_c\":[%.17g,"
                      "%.17g,%.17g],\"method\":\"%s\"",
                      result.value, result.witness_c0, result.witness_c[0],
                      result.witness_c[1], result.witness_c[2], method);
        os << buf;
        if (radius_oracle > 0) {
            double oracle = 0.0;
            check(cr_sampled_min(povm.ptr, radius_oracle, radius_c0_steps, &oracle));
            std::snprintf(buf, sizeof(buf), ",\"oracle\":%.17g", oracle);
            os << buf;
        }
        os << "}";
        emit(os.str(), radius_out);
        return 0;
    }

    if (cmd_construct->parsed()) {
        OwnedPovm povm;
        if (cmd_rotsym->parsed()) {
            check(cr_povm_rotsym_planar(rotsym_n, &povm.ptr));
        } else if (cmd_platonic_c->parsed()) {
            check(cr_povm_platonic(platonic_kind.c_str(), &povm.ptr));
        } else {
            double energy = 0.0;
            check(cr_povm_thomson(thomson_n, thomson_restarts, thomson_seed,
                                  thomson_iters, &povm.ptr, &energy));
            std::cerr << "thomson energy: " << energy << "\n";
        }
        OwnedString json;
        check(cr_povm_to_json(povm.ptr, &json.ptr));
        emit(json.str(), construct_out);
        return 0;
    }

    if (cmd_search->parsed()) {
        cr_search_result *result = nullptr;
        check(cr_maximize_radius(search_n, search_planar ? 1 : 0, search_samples,
                                 search_refine, search_seed, search_budget,
                                 &result));
        OwnedString json;
        check(cr_search_result_to_json(result, &json.ptr));
        emit(json.str(), search_out);
        if (!search_history.empty()) {
            OwnedString csv;
            check(cr_search_result_history_csv(result, &csv.ptr));
            emit(csv.str(), search_history);
        }
        cr_search_result_free(result);
        return 0;
    }

    if (cmd_lhs_build->parsed()) {
        auto parent = load_povm(lhs_parent);
        const auto settings = load_settings(lhs_settings);
        cr_lhs_model *model = nullptr;
        check(cr_build_lhs_werner(parent.ptr, lhs_r, settings.data(),
                                  static_cast<int>(settings.size() / 3), &model));
        OwnedString json;
        check(cr_lhs_model_to_json(model, &json.ptr));
        emit(json.str(), lhs_out);
        cr_lhs_model_free(model);
        return 0;
    }

    if (cmd_lhs_verify->parsed()) {
        cr_lhs_model *model = nullptr;
        check(cr_lhs_model_from_json(read_file(lhs_model).c_str(), &model));
        int ok = 0;
        double max_dev = 0.0;
        const cr_status status = cr_verify_lhs_werner(model, lhs_r, lhs_tol, &ok,
                                                      &max_dev);
        cr_lhs_model_free(model);
        check(status);
        char buf[128];
        std::snprintf(buf, sizeof(buf), "{\"ok\":%s,\"max_dev\":%.17g}",
                      ok ? "true" : "false", max_dev);
        emit(buf, "");
        return ok ? 0 : 2;
    }

    if (cmd_table2->parsed()) {
        OwnedString json, csv;
        check(cr_table2(table_seed, table_samples, table_refine,
                        table_no_search ? 0 : 1, &json.ptr, &csv.ptr));
        emit(table_format == "json" ? json.str() : csv.str(), table_out);
        return 0;
    }

    if (cmd_platonic->parsed()) {
        OwnedString json, csv;
        check(cr_table_platonic(&json.ptr, &csv.ptr));
        emit(platonic_format == "json" ? json.str() : csv.str(), platonic_out);
        return 0;
    }

    if (cmd_table1->parsed()) {
        OwnedString json;
        check(cr_table1_thresholds(t1_seed, &json.ptr));
        emit(json.str(), t1_out);
        return 0;
    }

    return 0;
}
