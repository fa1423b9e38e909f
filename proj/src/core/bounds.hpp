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
 * Analytic bounds relating the compatibility radius, the outcome count,
 * and the shared-randomness cost of simulating Werner-state assemblages.
 */

#pragma once

#include <utility>
#include <vector>

namespace compatrad {

/// Planar noise threshold 2/pi beyond which no finite planar parent works.
inline constexpr double kPlanarThreshold = 0.63661977236758134;
/// General threshold 1/2: the Werner state is unsteerable iff r <= 1/2.
inline constexpr double kGeneralThreshold = 0.5;

/// Isoperimetric cap (1/n) cot(pi/2n) on the planar n-outcome radius.
double planar_radius_upper(int n);

/// Divergent sandwich on the planar simulation cost near 2/pi:
///   sqrt(pi/6)  (2/pi - r)^(-1/2) <= N^p(r)
///   N^p(r) <= sqrt(5 pi/12) (2/pi - r)^(-1/2) + 1.
std::pair<double, double> planar_cost_bounds(double r);

/// Simplex caps: 1/2 for (n=3, planar) and 1/3 for (n=4, general);
/// other combinations are Unsupported.
double simplex_radius_cap(int n, bool planar);

struct CostPoint {
    double r = 0.0; // noise parameter, strictly increasing toward beta
    double n = 1.0; // simulation cost at that noise level
};

/// Least-squares slope of log N against -log(beta - r). For data generated
/// from the planar closed-form radii the slope is 1/2.
double fit_scaling_exponent(const std::vector<CostPoint> &points, double beta);

/// Smallest real n >= 3 whose odd-form closed radius reaches r; the
/// continuous inverse of the closed form used in the cost sandwich.
double planar_cost_from_closed_form(double r);

} // namespace compatrad
