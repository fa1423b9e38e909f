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

#include "core/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/rng.hpp"
#include "core/weights.hpp"

namespace compatrad {

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

std::vector<Vec3> platonic_vertices(PlatonicKind kind) {
    std::vector<Vec3> v;
    switch (kind) {
    case PlatonicKind::tetrahedron: {
        const double s = 1.0 / std::sqrt(3.0);
        v = {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
        break;
    }
    case PlatonicKind::octahedron:
        v = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
        break;
    case PlatonicKind::cube: {
        const double s = 1.0 / std::sqrt(3.0);
        for (const double x : {1.0, -1.0})
            for (const double y : {1.0, -1.0})
                for (const double z : {1.0, -1.0})
                    v.push_back({s * x, s * y, s * z});
        break;
    }
    case PlatonicKind::icosahedron: {
        const double s = 1.0 / std::sqrt(1.0 + kPhi * kPhi);
        for (const double a : {1.0, -1.0})
            for (const double b : {kPhi, -kPhi}) {
                v.push_back({0.0, s * a, s * b});
                v.push_back({s * b, 0.0, s * a});
                v.push_back({s * a, s * b, 0.0});
            }
        break;
    }
    case PlatonicKind::dodecahedron: {
        const double s3 = 1.0 / std::sqrt(3.0);
        for (const double x : {1.0, -1.0})
            for (const double y : {1.0, -1.0})
                for (const double z : {1.0, -1.0})
                    v.push_back({s3 * x, s3 * y, s3 * z});
        const double p2 = kPhi * kPhi;
        const double s = 1.0 / std::sqrt(1.0 + p2 * p2);
        for (const double a : {1.0, -1.0})
            for (const double b : {p2, -p2}) {
                v.push_back({0.0, s * a, s * b});
                v.push_back({s * b, 0.0, s * a});
                v.push_back({s * a, s * b, 0.0});
            }
        break;
    }
    }
    return v;
}

double thomson_energy(const std::vector<Vec3> &p) {
    double e = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            e += 1.0 / norm(p[i] - p[j]);
    return e;
}

/// One projected-gradient descent run with backtracking line search.
std::pair<std::vector<Vec3>, double> thomson_descend(std::vector<Vec3> p,
                                                     int max_iters) {
    const std::size_t n = p.size();
    double energy = thomson_energy(p);
    double step = 0.1;
    for (int iter = 0; iter < max_iters; ++iter) {
        std::vector<Vec3> grad(n, Vec3{0, 0, 0});
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const Vec3 d = p[i] - p[j];
                const double dn = norm(d);
                const Vec3 g = d * (-1.0 / (dn * dn * dn));
                grad[i] += g;
                grad[j] += -1.0 * g;
            }
        }
        double gnorm2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            grad[i] = grad[i] - p[i] * dot(grad[i], p[i]); // tangential part
            gnorm2 += dot(grad[i], grad[i]);
        }
        if (std::sqrt(gnorm2) < 1e-10)
            break;
        bool accepted = false;
        while (step > 1e-16) {
            std::vector<Vec3> trial(n);
            for (std::size_t i = 0; i < n; ++i)
                trial[i] = normalized(p[i] - grad[i] * step);
            const double trial_energy = thomson_energy(trial);
            if (trial_energy < energy) {
                p = std::move(trial);
                energy = trial_energy;
                step *= 1.3;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted)
            break;
    }
    return {p, energy};
}

} // namespace

QubitPOVM rotsym_planar(int n) {
    if (n < 2)
        throw Error(ErrorCode::out_of_range, "rotsym_planar requires n >= 2");
    std::vector<QubitEffect> effects;
    effects.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double angle = 2.0 * M_PI * i / n;
        effects.push_back({1.0 / n, 1.0, {std::cos(angle), 0.0, std::sin(angle)}});
    }
    return make_povm(std::move(effects), true);
}

double rotsym_planar_radius_closed_form(int n) {
    if (n < 3)
        throw Error(ErrorCode::out_of_range,
                    "closed-form planar radius requires n >= 3");
    if (n % 2 == 1) {
        const double x = M_PI / (2.0 * n);
        return std::cos(x) / (std::tan(x) * n);
    }
    const double x = M_PI / n;
    return 2.0 / (std::tan(x) * n);
}

double rotsym_planar_radius_odd_form_real(double n) {
    const double x = M_PI / (2.0 * n);
    return std::cos(x) / (std::tan(x) * n);
}

const char *platonic_name(PlatonicKind kind) {
    switch (kind) {
    case PlatonicKind::tetrahedron:
        return "tetrahedron";
    case PlatonicKind::octahedron:
        return "octahedron";
    case PlatonicKind::cube:
        return "cube";
    case PlatonicKind::icosahedron:
        return "icosahedron";
    case PlatonicKind::dodecahedron:
        return "dodecahedron";
    }
    return "unknown";
}

PlatonicKind platonic_from_name(const std::string &name) {
    for (const auto kind :
         {PlatonicKind::tetrahedron, PlatonicKind::octahedron, PlatonicKind::cube,
          PlatonicKind::icosahedron, PlatonicKind::dodecahedron})
        if (name == platonic_name(kind))
            return kind;
    throw Error(ErrorCode::out_of_range, "unknown platonic solid: " + name);
}

int platonic_outcomes(PlatonicKind kind) {
    switch (kind) {
    case PlatonicKind::tetrahedron:
        return 4;
    case PlatonicKind::octahedron:
        return 6;
    case PlatonicKind::cube:
        return 8;
    case PlatonicKind::icosahedron:
        return 12;
    case PlatonicKind::dodecahedron:
        return 20;
    }
    return 0;
}

QubitPOVM platonic(PlatonicKind kind) {
    const auto vertices = platonic_vertices(kind);
    std::vector<QubitEffect> effects;
    effects.reserve(vertices.size());
    for (const auto &v : vertices)
        effects.push_back({1.0 / vertices.size(), 1.0, v});
    return make_povm(std::move(effects), false);
}

double platonic_radius_closed_form(PlatonicKind kind) {
    switch (kind) {
    case PlatonicKind::tetrahedron:
    case PlatonicKind::octahedron:
        return 1.0 / 3.0;
    case PlatonicKind::cube:
        return std::sqrt(6.0) / 6.0;
    case PlatonicKind::icosahedron: {
        const double p = kPhi;
        return p * p * p * std::sqrt(1.0 + (1.0 - p) * (1.0 - p)) /
               (3.0 * (1.0 + p * p));
    }
    case PlatonicKind::dodecahedron:
        return std::sqrt(5.0 / 6.0) * kPhi * kPhi / 5.0;
    }
    throw Error(ErrorCode::out_of_range, "unknown platonic kind");
}

ThomsonResult thomson_detailed(const ThomsonConfig &cfg) {
    if (cfg.n < 2)
        throw Error(ErrorCode::out_of_range, "thomson requires n >= 2");
    if (cfg.restarts < 1)
        throw Error(ErrorCode::out_of_range, "thomson requires restarts >= 1");

    std::vector<Vec3> best;
    double best_energy = std::numeric_limits<double>::infinity();
    for (int start = 0; start < cfg.restarts; ++start) {
        std::uint64_t mix = cfg.seed ^ static_cast<std::uint64_t>(start);
        Rng rng(splitmix64(mix));
        std::vector<Vec3> p(cfg.n);
        for (auto &v : p)
            v = rng.unit_vector();
        auto [q, energy] = thomson_descend(std::move(p), cfg.max_iters);
        if (energy < best_energy) {
            best_energy = energy;
            best = std::move(q);
        }
    }

    Vec3 centroid{0, 0, 0};
    for (const auto &v : best)
        centroid += v * (1.0 / cfg.n);

    ThomsonResult result;
    result.energy = best_energy;
    result.uniform_weights = norm(centroid) <= 1e-6;
    std::vector<QubitEffect> effects;
    if (norm(centroid) <= kPovmTol) {
        for (const auto &v : best)
            effects.push_back({1.0 / cfg.n, 1.0, v});
    } else {
        // Sub-1e-6 centroid drift still violates the completion tolerance,
        // so the nearly uniform case goes through the same projection.
        const auto repaired =
            repair_weights(best, std::vector<double>(cfg.n, 1.0 / cfg.n));
        if (!repaired)
            throw Error(ErrorCode::infeasible_weights,
                        "thomson configuration admits no valid weights at n = " +
                            std::to_string(cfg.n));
        for (int i = 0; i < cfg.n; ++i)
            effects.push_back({(*repaired)[i], 1.0, best[i]});
    }
    result.povm = make_povm(std::move(effects), false);
    require_valid(result.povm);
    return result;
}

QubitPOVM thomson(const ThomsonConfig &cfg) { return thomson_detailed(cfg).povm; }

} // namespace compatrad
