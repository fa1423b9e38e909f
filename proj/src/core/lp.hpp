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
 * Dense two-phase simplex for the small linear programs in this library
 * (child decompositions, weight repair, max-min weight optimization).
 * All problems here have at most a few hundred rows, so a plain tableau
 * with Bland's anticycling rule is both fast enough and deterministic.
 */

#pragma once

#include <vector>

namespace compatrad::lp {

enum class Rel { le, ge, eq };

struct Constraint {
    std::vector<double> a;
    Rel rel = Rel::eq;
    double b = 0.0;
};

enum class Status { optimal, infeasible, unbounded };

struct Solution {
    Status status = Status::infeasible;
    double objective = 0.0;
    std::vector<double> x;
};

/// Maximizes c.x subject to the constraints and x >= 0.
Solution solve_max(const std::vector<double> &c, const std::vector<Constraint> &cons);

} // namespace compatrad::lp
