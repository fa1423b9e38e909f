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
 * Qubit POVMs in Bloch form, their validation, and the assemblages
 * they induce on Werner states.
 *
 * Every effect is stored as alpha * (I + eta * n.sigma) with
 * alpha in [0,1], eta in [0,1] and n a unit Bloch vector. A POVM
 * additionally satisfies sum_i alpha_i = 1 and sum_i alpha_i eta_i n_i = 0.
 */

#pragma once

#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/vec3.hpp"

namespace compatrad {

/// Default tolerance for POVM constraint checks.
inline constexpr double kPovmTol = 1e-9;

/// Weights below this are treated as zero and dropped on construction.
inline constexpr double kNegligibleWeight = 1e-12;

struct QubitEffect {
    double alpha = 0.0;
    double eta = 1.0;
    Vec3 n{0, 0, 1};

    /// The effect's Bloch generator eta * n.
    Vec3 v() const { return n * eta; }
};

struct QubitPOVM {
    std::vector<QubitEffect> effects;
    bool planar = false;

    int outcomes() const { return static_cast<int>(effects.size()); }
};

struct ValidationReport {
    bool valid = true;
    std::vector<std::pair<std::string, double>> violations;
};

/// Builds a POVM from raw effects: drops negligible-weight effects and
/// renormalizes directions that are within 1e-9 of unit norm. Directions
/// further from unit norm are rejected with InvalidPOVM. The completion
/// constraints are not enforced here; see validate_povm.
QubitPOVM make_povm(std::vector<QubitEffect> effects, bool planar);

/// Checks weight sum, completion vector, per-effect ranges and (when the
/// planar flag is set) planarity. Always returns a report, never throws.
ValidationReport validate_povm(const QubitPOVM &povm, double tol = kPovmTol);

/// Throws InvalidPOVM listing the first violation if the POVM is not valid.
void require_valid(const QubitPOVM &povm, double tol = kPovmTol);

/// Maps each effect to the antipodal pair {alpha/2, eta, +n} u {alpha/2, eta, -n},
/// doubling the outcome count and making the direction set centrally symmetric.
QubitPOVM symmetric_extension(const QubitPOVM &povm);

/// Replaces the POVM by the rank-1 POVM with weights
/// beta_i = alpha_i eta_i / sum_j alpha_j eta_j, dropping effects with
/// alpha_i eta_i = 0. The compatibility radius never decreases under this map.
QubitPOVM rank1_reduce(const QubitPOVM &povm);

enum class Outcome { plus = 0, minus = 1 };

struct AssemblageEntry {
    double weight = 0.0;
    Vec3 bloch{0, 0, 0};
};

/// Bob's subnormalized conditional states, indexed by (outcome, setting).
struct Assemblage {
    std::vector<Vec3> settings;
    /// entries[x][0] is the "+" outcome, entries[x][1] the "-" outcome.
    std::vector<std::array<AssemblageEntry, 2>> entries;

    const AssemblageEntry &at(Outcome a, int x) const {
        return entries.at(x)[static_cast<int>(a)];
    }
};

/// Assemblage of the Werner state with singlet weight r under projective
/// spin measurements along the given settings:
/// sigma_{+-|n} = (I -+ r n.sigma) / 4.
Assemblage werner_assemblage(double r, const std::vector<Vec3> &settings);

/// Renormalizes a nearly-unit vector, rejecting anything further than
/// 1e-9 from unit norm.
Vec3 require_unit(const Vec3 &v, const char *what);

} // namespace compatrad
