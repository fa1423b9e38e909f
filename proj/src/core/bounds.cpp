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

#include "core/bounds.hpp"

#include <cmath>

#include "core/constructions.hpp"
#include "core/error.hpp"

namespace compatrad {

double planar_radius_upper(int n) {
    if (n < 3)
        throw Error(ErrorCode::out_of_range, "planar_radius_upper requires n >= 3");
    return 1.0 / (n * std::tan(M_PI / (2.0 * n)));
}

std::pair<double, double> planar_cost_bounds(double r) {
    if (!(r >= 0.0 && r < kPlanarThreshold))
        throw Error(ErrorCode::out_of_range,
                    "planar cost bounds require 0 <= r < 2/pi");
    const double gap = kPlanarThreshold - r;
    const double lower = std::sqrt(M_PI / 6.0) / std::sqrt(gap);
    const double upper = std::sqrt(5.0 * M_PI / 12.0) / std::sqrt(gap) + 1.0;
    return {lower, upper};
}

double simplex_radius_cap(int n, bool planar) {
    if (n == 3 && planar)
        return 0.5;
    if (n == 4 && !planar)
        return 1.0 / 3.0;
    throw Error(ErrorCode::unsupported,
                "simplex cap is only known for (3, planar) and (4, general)");
}

double fit_scaling_exponent(const std::vector<CostPoint> &points, double beta) {
    if (points.size() < 4)
        throw Error(ErrorCode::insufficient_data,
                    "scaling fit requires at least 4 points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].r >= beta)
            throw Error(ErrorCode::insufficient_data,
                        "scaling fit requires r < beta for every point");
        if (points[i].n < 1.0)
            throw Error(ErrorCode::insufficient_data,
                        "scaling fit requires N >= 1");
        if (i > 0 && points[i].r <= points[i - 1].r)
            throw Error(ErrorCode::insufficient_data,
                        "scaling fit requires strictly increasing r");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto &p : points) {
        const double xv = -std::log(beta - p.r);
        const double yv = std::log(p.n);
        sx += xv;
        sy += yv;
        sxx += xv * xv;
        sxy += xv * yv;
    }
    const double m = static_cast<double>(points.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

double planar_cost_from_closed_form(double r) {
    if (!(r >= 0.0 && r < kPlanarThreshold))
        throw Error(ErrorCode::out_of_range, "r must lie in [0, 2/pi)");
    // The odd-form radius is increasing in n and tends to 2/pi, so the
    // inverse is a plain bisection.
    double lo = 3.0, hi = 3.0;
    while (rotsym_planar_radius_odd_form_real(hi) < r) {
        hi *= 2.0;
        if (hi > 1e12)
            throw Error(ErrorCode::internal, "cost inversion failed to bracket");
    }
    if (rotsym_planar_radius_odd_form_real(lo) >= r)
        return lo;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (rotsym_planar_radius_odd_form_real(mid) >= r)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace compatrad
