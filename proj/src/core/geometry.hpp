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
 * Zonotope facet machinery behind the compatibility radius.
 *
 * The compatible region of a POVM is a cross-section of the 4-d zonotope
 * generated by the vectors alpha_i * (1, eta_i n_i). Its inradius equals
 * the infimum of
 *
 *     f(c0, c) = sum_i alpha_i * |c0 + c . (eta_i n_i)|,   |c| = 1,
 *
 * and the infimum is attained on a finite candidate set of hyperplane
 * normals: one candidate per triple of distinct generator directions
 * (per pair, in the planar embedding). This header provides the objective,
 * the candidate enumeration, and an independent grid-sampling oracle used
 * by the tests.
 */

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "core/povm.hpp"
#include "core/vec3.hpp"

namespace compatrad {

struct HyperplaneCandidate {
    double c0 = 0.0;
    Vec3 c{0, 0, 1};
    /// Indices of the effects whose directions span the candidate facet;
    /// source[2] is -1 for planar (pair-based) candidates.
    std::array<int, 3> source{-1, -1, -1};
};

struct OracleConfig {
    long grid_points = 20000;
    int c0_steps = 33;
    std::uint64_t seed = 0; // unused: the grid is deterministic by construction
};

/// Evaluates f(c0, c) = sum_i alpha_i |c0 + c . (eta_i n_i)|.
double objective(const QubitPOVM &povm, double c0, const Vec3 &c);

/// Candidate facet normals for a general POVM: for every unordered triple
/// of distinct generator directions, c ~ (v_x - v_y) x (v_x - v_z) and
/// c0 = -c . v_x, emitted with both signs and deduplicated. Throws
/// TooFewEffects when fewer than three distinct directions exist.
std::vector<HyperplaneCandidate> facet_candidates(const QubitPOVM &povm);

/// Planar candidates: for every pair of distinct directions the normal of
/// the segment through (1, v_x) and (1, v_y) in the (1, x, z) embedding.
/// Throws NotPlanar when the POVM is not flagged planar and TooFewEffects
/// below two distinct directions.
std::vector<HyperplaneCandidate> facet_candidates_planar(const QubitPOVM &povm);

/// Same enumerations on bare generator vectors; the candidate set depends
/// only on the directions, never on the weights.
std::vector<HyperplaneCandidate> facet_candidates_for(const std::vector<Vec3> &dirs,
                                                      bool planar);

/// Independent oracle: minimizes the objective over a deterministic
/// Fibonacci sphere grid (uniform circle grid when planar) times a uniform
/// c0 grid, then locally refines the best grid points by compass search.
/// The result never exceeds any grid sample.
double sampled_min(const QubitPOVM &povm, const OracleConfig &cfg);

} // namespace compatrad
