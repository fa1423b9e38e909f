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
 * Compatibility radii with minimizing hyperplane witnesses.
 */

#pragma once

#include <vector>

#include "core/geometry.hpp"
#include "core/povm.hpp"

namespace compatrad {

enum class RadiusMethod { facet_general, facet_planar, symmetric };

struct RadiusResult {
    double value = 0.0;
    double witness_c0 = 0.0;
    Vec3 witness_c{0, 0, 1};
    RadiusMethod method = RadiusMethod::facet_general;
};

/// Exact compatibility radius by facet enumeration: the largest r such
/// that every unbiased spin measurement of purity r can be simulated by
/// the POVM. Planar-flagged POVMs use the in-plane (zonogon) enumeration.
RadiusResult compat_radius(const QubitPOVM &povm);

/// Radius of the symmetrized POVM: min over unit c of
/// sum_i alpha_i eta_i |c . n_i|. Equals
/// compat_radius(symmetric_extension(povm)).
RadiusResult compat_radius_sym(const QubitPOVM &povm);

struct ChainCheck {
    double r = 0.0;
    double r_sym = 0.0;
    bool ok = false;
};

/// Evaluates both radii and checks the inradius chain r <= r_sym.
ChainCheck inradius_chain_check(const QubitPOVM &povm);

/// Minimum of the objective over an explicit candidate list, with the
/// deterministic lexicographic tie-break on (c0, c).
RadiusResult minimize_over_candidates(const QubitPOVM &povm,
                                      const std::vector<HyperplaneCandidate> &candidates,
                                      RadiusMethod method);

const char *radius_method_name(RadiusMethod m);

} // namespace compatrad
