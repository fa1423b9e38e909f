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
 * Decomposition of noisy spin measurements into a parent POVM and the
 * resulting local-hidden-state models for Werner states.
 *
 * A child measurement (I + t.sigma)/2 is simulable when coefficients
 * q_i in [0,1] exist with sum q_i alpha_i = 1/2 and
 * 2 sum q_i alpha_i eta_i n_i = t. Feeding those response functions with
 * the parent's conditional states of the singlet yields an LHS model whose
 * size equals the parent outcome count.
 */

#pragma once

#include <vector>

#include "core/povm.hpp"
#include "core/radius.hpp"

namespace compatrad {

struct ChildDecomposition {
    std::vector<double> q; // one response probability per parent effect
    Vec3 target{0, 0, 0};
};

/// Finds response coefficients for the child with Bloch vector `target`.
/// Feasibility is decided by a phase-1 LP; among feasible q the one
/// closest to the uniform response 1/2 is returned, which keeps the output
/// deterministic and symmetric for symmetric parents. Throws Infeasible
/// when the target lies outside the compatible region.
ChildDecomposition decompose_child(const QubitPOVM &povm, const Vec3 &target);

/// Closed-form response probabilities of the rotationally symmetric planar
/// parent for the child at angle theta on the radius-R^p(n) circle.
std::vector<double> planar_response(int n, double theta);

struct LHSModel {
    std::vector<double> p;           // hidden-state distribution
    std::vector<Vec3> hidden_bloch;  // Bob's hidden states
    std::vector<Vec3> settings;      // Alice's measurement directions
    // response[x][i] = p(+ | setting x, hidden i); the "-" response is
    // its complement, stored explicitly for serialization and checking.
    std::vector<std::vector<double>> response_plus;
    std::vector<std::vector<double>> response_minus;
};

/// LHS model for the Werner state: p(i) = alpha_i, hidden states are the
/// singlet conditionals -eta_i n_i, responses from decompose_child at
/// r times each setting. Requires r within the parent's radius.
LHSModel build_lhs_werner(const QubitPOVM &parent, double r,
                          const std::vector<Vec3> &settings);

struct LhsCheck {
    bool ok = false;
    double max_dev = 0.0;
};

/// Compares the model's reconstruction sum_i response(a,x,i) p(i) rho_i
/// against the assemblage, entrywise in (trace, Bloch) coordinates.
LhsCheck verify_lhs(const LHSModel &model, const Assemblage &assemblage, double tol);

} // namespace compatrad
