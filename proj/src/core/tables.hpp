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

/**
 * @file
 * Reproduction of the reference tables: compatibility radii of named
 * constructions and search lower bounds next to their published reference
 * values, plus the Werner-state threshold demonstrations.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace compatrad {

enum class RowStatus { ok, skipped, infeasible };

struct Table2Row {
    int n = 0;
    std::optional<double> planar_symmetric;
    std::optional<double> planar_numeric;
    std::optional<double> thomson;
    std::optional<double> general_numeric;
    RowStatus status = RowStatus::ok;
};

struct Table2Options {
    std::uint64_t seed = 0;
    long samples = 500;
    int refine_iters = 100;
    int thomson_restarts = 50;
    bool run_search = true; // numeric columns are the budget-heavy part
};

/// Radii table for n = 3..12: closed-form symmetric planar radii, Thomson
/// construction radii, and search lower bounds where reference values exist.
std::vector<Table2Row> reproduce_table2(const Table2Options &options);

std::string table2_to_csv(const std::vector<Table2Row> &rows);
std::string table2_to_json(const std::vector<Table2Row> &rows);

/// Reference values for the radii table; NaN marks cells without a
/// published value. Indexed by n - 3.
struct Table2Reference {
    static constexpr int kFirstN = 3;
    static constexpr int kLastN = 12;
    static double planar_symmetric(int n);
    static double planar_numeric(int n);
    static double thomson(int n); // NaN at n = 11 (no published value)
    static double general_numeric(int n);
};

struct PlatonicRow {
    std::string name;
    int outcomes = 0;
    double computed = 0.0;
    double closed_form = 0.0;
    double reference = 0.0; // published 3-4 digit decimal
};

std::vector<PlatonicRow> reproduce_platonic();
std::string platonic_to_csv(const std::vector<PlatonicRow> &rows);
std::string platonic_to_json(const std::vector<PlatonicRow> &rows);

/// Computational demonstration of the Werner simulation-cost thresholds:
/// a one-state model at r = 0, a four-state model up to r = 1/3,
/// infeasibility of the tetrahedron decomposition beyond 1/3, and that no
/// named construction reaches r > 1/2.
std::string table1_thresholds_json(std::uint64_t seed);

} // namespace compatrad
