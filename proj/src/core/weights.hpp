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
 * Feasible-weight computations shared by the constructions, search, and
 * LHS modules: least-squares projections onto {x in [lo,hi]^n, A x = b}
 * and the exact max-min weight optimization for fixed directions.
 */

#pragma once

#include <optional>
#include <vector>

#include "core/vec3.hpp"

namespace compatrad {

/// Euclidean projection of y0 onto {x : lo <= x <= hi, A x = b} via
/// Dykstra's alternating projections followed by an active-set polish.
/// Returns nullopt when the set is empty (decided by a phase-1 LP).
std::optional<std::vector<double>>
project_box_affine(const std::vector<double> &y0,
                   const std::vector<std::vector<double>> &A,
                   const std::vector<double> &b, double lo, double hi);

/// Projection of alpha0 onto the feasible weight polytope
/// {alpha >= 0, sum alpha = 1, sum alpha_i v_i = 0} for the given
/// generator directions. Returns nullopt when the polytope is empty.
std::optional<std::vector<double>> repair_weights(const std::vector<Vec3> &dirs,
                                                  const std::vector<double> &alpha0);

/// True when some valid weight assignment exists for the directions.
bool feasible_weights_exist(const std::vector<Vec3> &dirs);

struct WeightOptimum {
    std::vector<double> alpha;
    double radius = 0.0;
};

/// Maximizes the compatibility radius over weights for fixed rank-1
/// directions. The facet candidate set depends only on the directions, so
/// this is an exact linear program: max t s.t. sum_i alpha_i w_c(i) >= t
/// over all candidates c, alpha in the feasible weight polytope.
std::optional<WeightOptimum> optimal_weights(const std::vector<Vec3> &dirs,
                                             bool planar);

} // namespace compatrad
