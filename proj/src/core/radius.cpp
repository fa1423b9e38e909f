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

#include "core/radius.hpp"

#include <cmath>
#include <limits>

namespace compatrad {

namespace {

constexpr double kParallelCross = 1e-10;

bool witness_less(double c0a, const Vec3 &ca, double c0b, const Vec3 &cb) {
    if (c0a != c0b)
        return c0a < c0b;
    return lex_less(ca, cb);
}

} // namespace

const char *radius_method_name(RadiusMethod m) {
    switch (m) {
    case RadiusMethod::facet_general:
        return "facet_general";
    case RadiusMethod::facet_planar:
        return "facet_planar";
    case RadiusMethod::symmetric:
        return "symmetric";
    }
    return "unknown";
}

RadiusResult minimize_over_candidates(const QubitPOVM &povm,
                                      const std::vector<HyperplaneCandidate> &candidates,
                                      RadiusMethod method) {
    if (candidates.empty())
        throw Error(ErrorCode::too_few_effects, "no facet candidates to minimize over");
    RadiusResult best;
    best.method = method;
    best.value = std::numeric_limits<double>::infinity();
    for (const auto &cand : candidates) {
        const double val = objective(povm, cand.c0, cand.c);
        if (val < best.value - 1e-12) {
            best.value = val;
            best.witness_c0 = cand.c0;
            best.witness_c = cand.c;
        } else if (val <= best.value + 1e-12 &&
                   witness_less(cand.c0, cand.c, best.witness_c0, best.witness_c)) {
            // Keep the smallest witness among ties so output is reproducible.
            best.value = std::min(best.value, val);
            best.witness_c0 = cand.c0;
            best.witness_c = cand.c;
        }
    }
    if (best.value < -1e-12)
        throw Error(ErrorCode::internal, "negative radius from facet enumeration");
    return best;
}

RadiusResult compat_radius(const QubitPOVM &povm) {
    require_valid(povm);
    if (povm.planar)
        return minimize_over_candidates(povm, facet_candidates_planar(povm),
                                        RadiusMethod::facet_planar);
    return minimize_over_candidates(povm, facet_candidates(povm),
                                    RadiusMethod::facet_general);
}

RadiusResult compat_radius_sym(const QubitPOVM &povm) {
    require_valid(povm);
    if (povm.effects.empty())
        throw Error(ErrorCode::too_few_effects, "empty POVM");

    std::vector<Vec3> v;
    for (const auto &e : povm.effects)
        if (e.eta * e.alpha > kNegligibleWeight)
            v.push_back(e.v());

    RadiusResult best;
    best.method = RadiusMethod::symmetric;
    best.witness_c0 = 0.0;

    auto value_at = [&povm](const Vec3 &c) {
        double sum = 0.0;
        for (const auto &e : povm.effects)
            sum += e.alpha * e.eta * std::abs(dot(c, e.n));
        return sum;
    };

    std::vector<Vec3> candidates;
    if (povm.planar) {
        // Zonogon edges are parallel to single generators.
        for (const auto &g : v) {
            const Vec3 c = normalized(Vec3{-g.z, 0.0, g.x});
            candidates.push_back(c);
            candidates.push_back(-c);
        }
    } else {
        for (size_t i = 0; i < v.size(); ++i) {
            for (size_t j = i + 1; j < v.size(); ++j) {
                const Vec3 raw = cross(v[i], v[j]);
                if (norm(raw) < kParallelCross)
                    continue;
                const Vec3 c = normalized(raw);
                candidates.push_back(c);
                candidates.push_back(-c);
            }
        }
    }

    if (candidates.empty()) {
        // All generators parallel (or zero): the symmetrized zonotope is a
        // segment or a point, so the inradius vanishes.
        best.value = 0.0;
        best.witness_c = v.empty() ? Vec3{1, 0, 0} : any_orthogonal(v.front());
        if (povm.planar && std::abs(best.witness_c.y) > 0.5 && !v.empty())
            best.witness_c = normalized(Vec3{-v.front().z, 0.0, v.front().x});
        return best;
    }

    best.value = std::numeric_limits<double>::infinity();
    bool first = true;
    for (const auto &c : candidates) {
        const double val = value_at(c);
        if (first || val < best.value - 1e-12) {
            best.value = val;
            best.witness_c = c;
            first = false;
        } else if (val <= best.value + 1e-12 &&
                   witness_less(0.0, c, 0.0, best.witness_c)) {
            best.value = std::min(best.value, val);
            best.witness_c = c;
        }
    }
    return best;
}

ChainCheck inradius_chain_check(const QubitPOVM &povm) {
    ChainCheck out;
    out.r = compat_radius(povm).value;
    out.r_sym = compat_radius_sym(povm).value;
    out.ok = out.r <= out.r_sym + 1e-9;
    return out;
}

} // namespace compatrad
