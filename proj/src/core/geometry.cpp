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

#include "core/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <tuple>

namespace compatrad {

namespace {

constexpr double kDegenerateCross = 1e-10;
constexpr double kDedupQuantum = 1e-9;

std::int64_t quantize(double x) {
    return static_cast<std::int64_t>(std::llround(x / kDedupQuantum));
}

using CandidateKey = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>;

CandidateKey candidate_key(double c0, const Vec3 &c) {
    return {quantize(c0), quantize(c.x), quantize(c.y), quantize(c.z)};
}

/// Distinct generator directions with a representative source index each.
std::vector<std::pair<Vec3, int>> distinct_directions(const std::vector<Vec3> &dirs) {
    std::vector<std::pair<Vec3, int>> unique;
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, int> seen;
    for (int i = 0; i < static_cast<int>(dirs.size()); ++i) {
        const auto key = std::make_tuple(quantize(dirs[i].x), quantize(dirs[i].y),
                                         quantize(dirs[i].z));
        if (seen.emplace(key, i).second)
            unique.emplace_back(dirs[i], i);
    }
    return unique;
}

void emit_both_signs(std::vector<HyperplaneCandidate> &out,
                     std::map<CandidateKey, bool> &dedup, double c0, const Vec3 &c,
                     const std::array<int, 3> &source) {
    for (const double sign : {1.0, -1.0}) {
        const double sc0 = sign * c0;
        const Vec3 sc = c * sign;
        if (dedup.emplace(candidate_key(sc0, sc), true).second)
            out.push_back({sc0, sc, source});
    }
}

std::vector<Vec3> generators(const QubitPOVM &povm) {
    std::vector<Vec3> v;
    v.reserve(povm.effects.size());
    for (const auto &e : povm.effects)
        v.push_back(e.v());
    return v;
}

struct GridPoint {
    double value;
    Vec3 c;
    double c0;
};

/// Exact objective together with per-direction dot products reused over c0.
double objective_dots(const QubitPOVM &povm, double c0, const std::vector<double> &d) {
    double sum = 0.0;
    for (size_t i = 0; i < d.size(); ++i)
        sum += povm.effects[i].alpha * std::abs(c0 + d[i]);
    return sum;
}

/// Compass search over (direction, c0), shrinking the step until 1e-12.
GridPoint refine_point(const QubitPOVM &povm, GridPoint p, double step, bool planar) {
    while (step > 1e-12) {
        bool improved = false;
        // Tangent frame around the current direction; for planar POVMs the
        // search stays on the x-z circle.
        std::vector<Vec3> moves;
        if (planar) {
            const Vec3 t = normalized(Vec3{-p.c.z, 0.0, p.c.x});
            moves = {t, -t};
        } else {
            const Vec3 u = any_orthogonal(p.c);
            const Vec3 v = cross(p.c, u);
            moves = {u, -u, v, -v};
        }
        for (const auto &m : moves) {
            const Vec3 cand = normalized(p.c + m * step);
            const double val = objective(povm, p.c0, cand);
            if (val < p.value) {
                p.value = val;
                p.c = cand;
                improved = true;
            }
        }
        for (const double dc : {step, -step}) {
            const double c0 = std::clamp(p.c0 + dc, -1.0, 1.0);
            const double val = objective(povm, c0, p.c);
            if (val < p.value) {
                p.value = val;
                p.c0 = c0;
                improved = true;
            }
        }
        if (!improved)
            step *= 0.5;
    }
    return p;
}

} // namespace

double objective(const QubitPOVM &povm, double c0, const Vec3 &c) {
    double sum = 0.0;
    for (const auto &e : povm.effects)
        sum += e.alpha * std::abs(c0 + e.eta * dot(c, e.n));
    return sum;
}

std::vector<HyperplaneCandidate> facet_candidates_for(const std::vector<Vec3> &dirs,
                                                      bool planar) {
    const auto unique = distinct_directions(dirs);
    std::vector<HyperplaneCandidate> out;
    std::map<CandidateKey, bool> dedup;

    if (planar) {
        if (unique.size() < 2)
            throw Error(ErrorCode::too_few_effects,
                        "planar facet enumeration needs at least 2 distinct directions");
        for (size_t x = 0; x < unique.size(); ++x) {
            for (size_t y = x + 1; y < unique.size(); ++y) {
                const Vec3 &a = unique[x].first;
                const Vec3 &b = unique[y].first;
                // Cross product of (1, a_x, a_z) and (1, b_x, b_z).
                const double c0 = a.x * b.z - a.z * b.x;
                const Vec3 c{a.z - b.z, 0.0, b.x - a.x};
                const double cn = norm(c);
                if (cn < kDegenerateCross)
                    continue;
                emit_both_signs(out, dedup, c0 / cn, c * (1.0 / cn),
                                {unique[x].second, unique[y].second, -1});
            }
        }
        return out;
    }

    if (unique.size() < 3)
        throw Error(ErrorCode::too_few_effects,
                    "facet enumeration needs at least 3 distinct directions");
    for (size_t x = 0; x < unique.size(); ++x) {
        for (size_t y = x + 1; y < unique.size(); ++y) {
            for (size_t z = y + 1; z < unique.size(); ++z) {
                const Vec3 &a = unique[x].first;
                const Vec3 c_raw = cross(a - unique[y].first, a - unique[z].first);
                const double cn = norm(c_raw);
                if (cn < kDegenerateCross)
                    continue;
                const Vec3 c = c_raw * (1.0 / cn);
                emit_both_signs(out, dedup, -dot(c, a), c,
                                {unique[x].second, unique[y].second, unique[z].second});
            }
        }
    }
    return out;
}

std::vector<HyperplaneCandidate> facet_candidates(const QubitPOVM &povm) {
    require_valid(povm);
    return facet_candidates_for(generators(povm), false);
}

std::vector<HyperplaneCandidate> facet_candidates_planar(const QubitPOVM &povm) {
    require_valid(povm);
    if (!povm.planar)
        throw Error(ErrorCode::not_planar,
                    "planar facet enumeration requires the planar flag");
    return facet_candidates_for(generators(povm), true);
}

double sampled_min(const QubitPOVM &povm, const OracleConfig &cfg) {
    require_valid(povm);
    const long n_dirs = std::max(cfg.grid_points, 100L);
    const int n_c0 = std::max(cfg.c0_steps, 3);

    const auto v = generators(povm);
    std::vector<double> dots(v.size());

    // Keep the best few grid directions; refining several starting points
    // guards against landing in the wrong local basin.
    constexpr size_t kKeep = 32;
    std::vector<GridPoint> best;

    auto consider = [&](const Vec3 &c) {
        for (size_t i = 0; i < v.size(); ++i)
            dots[i] = dot(c, v[i]);
        double local_best = std::numeric_limits<double>::infinity();
        double local_c0 = 0.0;
        for (int k = 0; k < n_c0; ++k) {
            const double c0 = -1.0 + 2.0 * k / (n_c0 - 1);
            const double val = objective_dots(povm, c0, dots);
            if (val < local_best) {
                local_best = val;
                local_c0 = c0;
            }
        }
        if (best.size() < kKeep || local_best < best.back().value) {
            best.push_back({local_best, c, local_c0});
            std::sort(best.begin(), best.end(),
                      [](const GridPoint &a, const GridPoint &b) {
                          return a.value < b.value;
                      });
            if (best.size() > kKeep)
                best.pop_back();
        }
    };

    if (povm.planar) {
        for (long j = 0; j < n_dirs; ++j) {
            const double psi = 2.0 * M_PI * j / n_dirs;
            consider({std::cos(psi), 0.0, std::sin(psi)});
        }
    } else {
        // Fibonacci sphere lattice.
        const double golden = M_PI * (3.0 - std::sqrt(5.0));
        for (long j = 0; j < n_dirs; ++j) {
            const double z = 1.0 - (2.0 * j + 1.0) / n_dirs;
            const double rad = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double phi = golden * j;
            consider({rad * std::cos(phi), rad * std::sin(phi), z});
        }
    }

    const double spacing = povm.planar
                               ? 2.0 * M_PI / n_dirs
                               : std::sqrt(4.0 * M_PI / static_cast<double>(n_dirs));
    double result = best.front().value;
    for (const auto &p : best)
        result = std::min(result,
                          refine_point(povm, p, 4.0 * spacing, povm.planar).value);
    return result;
}

} // namespace compatrad
