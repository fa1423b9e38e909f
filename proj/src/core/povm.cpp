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

#include "core/povm.hpp"

#include <cmath>

namespace compatrad {

Vec3 require_unit(const Vec3 &v, const char *what) {
    const double n = norm(v);
    if (!std::isfinite(n) || std::abs(n - 1.0) > 1e-9)
        throw Error(ErrorCode::invalid_povm,
                    std::string(what) + ": direction norm " + std::to_string(n) +
                        " is not within 1e-9 of 1");
    return {v.x / n, v.y / n, v.z / n};
}

QubitPOVM make_povm(std::vector<QubitEffect> effects, bool planar) {
    QubitPOVM povm;
    povm.planar = planar;
    povm.effects.reserve(effects.size());
    for (auto &e : effects) {
        if (e.alpha < kNegligibleWeight)
            continue;
        e.n = require_unit(e.n, "effect");
        povm.effects.push_back(e);
    }
    return povm;
}

ValidationReport validate_povm(const QubitPOVM &povm, double tol) {
    ValidationReport report;
    auto flag = [&report](const std::string &name, double magnitude) {
        report.valid = false;
        report.violations.emplace_back(name, magnitude);
    };

    if (povm.effects.empty()) {
        flag("empty", 1.0);
        return report;
    }

    double weight_sum = 0.0;
    Vec3 completion{0, 0, 0};
    for (int i = 0; i < povm.outcomes(); ++i) {
        const auto &e = povm.effects[i];
        const std::string tag = "effect[" + std::to_string(i) + "]";
        if (e.alpha < -tol || e.alpha > 1.0 + tol)
            flag(tag + ".alpha-range", std::max(-e.alpha, e.alpha - 1.0));
        if (e.eta < -tol || e.eta > 1.0 + tol)
            flag(tag + ".eta-range", std::max(-e.eta, e.eta - 1.0));
        const double dn = std::abs(norm(e.n) - 1.0);
        if (dn > 1e-12)
            flag(tag + ".direction-norm", dn);
        if (povm.planar && std::abs(e.n.y) > tol)
            flag(tag + ".planarity", std::abs(e.n.y));
        weight_sum += e.alpha;
        completion += e.v() * e.alpha;
    }
    if (std::abs(weight_sum - 1.0) > tol)
        flag("weight-sum", std::abs(weight_sum - 1.0));
    if (norm(completion) > tol)
        flag("completion", norm(completion));
    return report;
}

void require_valid(const QubitPOVM &povm, double tol) {
    const auto report = validate_povm(povm, tol);
    if (!report.valid)
        throw Error(ErrorCode::invalid_povm,
                    "invalid POVM: " + report.violations.front().first +
                        " (magnitude " +
                        std::to_string(report.violations.front().second) + ")");
}

QubitPOVM symmetric_extension(const QubitPOVM &povm) {
    require_valid(povm);
    QubitPOVM out;
    out.planar = povm.planar;
    out.effects.reserve(2 * povm.effects.size());
    for (const auto &e : povm.effects)
        out.effects.push_back({e.alpha / 2.0, e.eta, e.n});
    for (const auto &e : povm.effects)
        out.effects.push_back({e.alpha / 2.0, e.eta, -e.n});
    return out;
}

QubitPOVM rank1_reduce(const QubitPOVM &povm) {
    require_valid(povm);
    double total = 0.0;
    for (const auto &e : povm.effects)
        total += e.alpha * e.eta;
    if (total <= kNegligibleWeight)
        throw Error(ErrorCode::degenerate_povm,
                    "rank1_reduce: all effects are proportional to identity");
    QubitPOVM out;
    out.planar = povm.planar;
    for (const auto &e : povm.effects) {
        const double mass = e.alpha * e.eta;
        if (mass <= kNegligibleWeight)
            continue;
        out.effects.push_back({mass / total, 1.0, e.n});
    }
    return out;
}

Assemblage werner_assemblage(double r, const std::vector<Vec3> &settings) {
    if (!(r >= 0.0 && r <= 1.0))
        throw Error(ErrorCode::out_of_range,
                    "werner_assemblage: r must lie in [0, 1]");
    Assemblage assemblage;
    assemblage.settings.reserve(settings.size());
    assemblage.entries.reserve(settings.size());
    for (const auto &raw : settings) {
        const Vec3 n = require_unit(raw, "setting");
        assemblage.settings.push_back(n);
        assemblage.entries.push_back({AssemblageEntry{0.5, n * -r},
                                      AssemblageEntry{0.5, n * r}});
    }
    return assemblage;
}

} // namespace compatrad
