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
 * Named parent-POVM families: rotationally symmetric planar fans,
 * Platonic-solid vertex configurations, and minimal-energy (Thomson)
 * point sets.
 */

#pragma once

#include <cstdint>
#include <string>

#include "core/povm.hpp"

namespace compatrad {

/// n equally weighted rank-1 effects at angles 2*pi*i/n in the x-z plane.
QubitPOVM rotsym_planar(int n);

/// Closed-form compatibility radius of rotsym_planar(n) for n >= 3:
/// (1/n) cot(pi/2n) cos(pi/2n) for odd n, (2/n) cot(pi/n) for even n.
double rotsym_planar_radius_closed_form(int n);

/// Continuous extension of the odd-n closed form to real arguments;
/// used for inverting radius -> outcome count in the cost bounds.
double rotsym_planar_radius_odd_form_real(double n);

enum class PlatonicKind { tetrahedron, octahedron, cube, icosahedron, dodecahedron };

/// Equal-weight rank-1 POVM on the vertices of the given Platonic solid,
/// with the icosahedral/dodecahedral coordinates in golden-ratio form.
QubitPOVM platonic(PlatonicKind kind);

/// Exact closed-form radius of the Platonic POVMs.
double platonic_radius_closed_form(PlatonicKind kind);

const char *platonic_name(PlatonicKind kind);
PlatonicKind platonic_from_name(const std::string &name);
int platonic_outcomes(PlatonicKind kind);

struct ThomsonConfig {
    int n = 4;
    int restarts = 50;
    std::uint64_t seed = 0;
    int max_iters = 5000;
};

struct ThomsonResult {
    QubitPOVM povm;
    double energy = 0.0;          // achieved Riesz s=1 energy
    bool uniform_weights = true;  // false when the centroid had to be repaired
};

/// Multi-start projected-gradient minimization of sum_{i<j} 1/|p_i - p_j|
/// on the sphere. Uses equal weights when the centroid vanishes, otherwise
/// solves for the feasible weights closest to uniform. Throws
/// InfeasibleWeights when no nonnegative weight assignment exists.
ThomsonResult thomson_detailed(const ThomsonConfig &cfg);

QubitPOVM thomson(const ThomsonConfig &cfg);

} // namespace compatrad
