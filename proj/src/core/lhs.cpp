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

#include "core/lhs.hpp"

#include <cmath>

#include "core/constructions.hpp"
#include "core/weights.hpp"

namespace compatrad {

ChildDecomposition decompose_child(const QubitPOVM &povm, const Vec3 &target) {
    require_valid(povm);
    if (norm(target) > 1.0 + 1e-12)
        throw Error(ErrorCode::out_of_range, "child Bloch vector exceeds unit norm");

    const std::size_t n = povm.effects.size();
    std::vector<std::vector<double>> A(4, std::vector<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        const auto &e = povm.effects[j];
        const Vec3 v = e.v();
        A[0][j] = e.alpha;
        A[1][j] = 2.0 * e.alpha * v.x;
        A[2][j] = 2.0 * e.alpha * v.y;
        A[3][j] = 2.0 * e.alpha * v.z;
    }
    const std::vector<double> b = {0.5, target.x, target.y, target.z};

    const auto q = project_box_affine(std::vector<double>(n, 0.5), A, b, 0.0, 1.0);
    if (!q)
        throw Error(ErrorCode::infeasible,
                    "child measurement lies outside the compatible region");
    return {*q, target};
}

std::vector<double> planar_response(int n, double theta) {
    if (n < 3)
        throw Error(ErrorCode::out_of_range, "planar_response requires n >= 3");

    // Bring theta into the fundamental domain between two neighbouring
    // vertices of the compatible zonogon. The vertex spacing is 2*pi/n for
    // even n and pi/n for odd n.
    const bool even = (n % 2 == 0);
    const double spacing = even ? 2.0 * M_PI / n : M_PI / n;
    const double half = even ? M_PI / n : M_PI / (2.0 * n);
    const double k = std::floor(theta / spacing + 0.5);
    const double x = theta - k * spacing;

    const double phi1 = (k - 0.5) * spacing;
    const double phi2 = (k + 0.5) * spacing;
    const Vec3 m1{std::cos(phi1), 0.0, std::sin(phi1)};
    const Vec3 m2{std::cos(phi2), 0.0, std::sin(phi2)};

    auto sgn = [](double t) { return t > 1e-12 ? 1.0 : (t < -1e-12 ? -1.0 : 0.0); };

    std::vector<double> p(n);
    const double denom = 2.0 * std::sin(half);
    for (int i = 0; i < n; ++i) {
        const double angle = 2.0 * M_PI * i / n;
        const Vec3 ni{std::cos(angle), 0.0, std::sin(angle)};
        const double s1 = sgn(dot(m1, ni));
        const double s2 = sgn(dot(m2, ni));
        p[i] = 0.5 * (1.0 + (s1 * std::sin(half - x) + s2 * std::sin(half + x)) / denom);
    }
    return p;
}

LHSModel build_lhs_werner(const QubitPOVM &parent, double r,
                          const std::vector<Vec3> &settings) {
    require_valid(parent);
    double radius = 0.0;
    try {
        radius = compat_radius(parent).value;
    } catch (const Error &e) {
        // Parents with fewer than three distinct directions have a
        // degenerate compatible region; they can still serve r = 0.
        if (e.code() != ErrorCode::too_few_effects)
            throw;
    }
    if (r > radius + 1e-12)
        throw Error(ErrorCode::infeasible,
                    "noise parameter r exceeds the parent's compatibility radius");

    LHSModel model;
    model.p.reserve(parent.effects.size());
    model.hidden_bloch.reserve(parent.effects.size());
    for (const auto &e : parent.effects) {
        model.p.push_back(e.alpha);
        model.hidden_bloch.push_back(-e.v());
    }
    model.settings.reserve(settings.size());
    for (const auto &raw : settings)
        model.settings.push_back(require_unit(raw, "setting"));

    for (const auto &n : model.settings) {
        const auto decomposition = decompose_child(parent, n * r);
        model.response_plus.push_back(decomposition.q);
        std::vector<double> minus(decomposition.q.size());
        for (std::size_t i = 0; i < minus.size(); ++i)
            minus[i] = 1.0 - decomposition.q[i];
        model.response_minus.push_back(std::move(minus));
    }
    return model;
}

LhsCheck verify_lhs(const LHSModel &model, const Assemblage &assemblage, double tol) {
    const std::size_t n_hidden = model.p.size();
    const std::size_t n_settings = assemblage.settings.size();
    if (model.hidden_bloch.size() != n_hidden ||
        model.response_plus.size() != n_settings ||
        model.response_minus.size() != n_settings ||
        assemblage.entries.size() != n_settings)
        throw Error(ErrorCode::shape_mismatch, "model/assemblage index sets differ");
    for (const auto &row : model.response_plus)
        if (row.size() != n_hidden)
            throw Error(ErrorCode::shape_mismatch, "response row size mismatch");
    for (const auto &row : model.response_minus)
        if (row.size() != n_hidden)
            throw Error(ErrorCode::shape_mismatch, "response row size mismatch");

    LhsCheck check;
    for (std::size_t x = 0; x < n_settings; ++x) {
        for (const Outcome a : {Outcome::plus, Outcome::minus}) {
            const auto &resp = (a == Outcome::plus) ? model.response_plus[x]
                                                    : model.response_minus[x];
            double weight = 0.0;
            Vec3 bloch{0, 0, 0};
            for (std::size_t i = 0; i < n_hidden; ++i) {
                weight += resp[i] * model.p[i];
                bloch += model.hidden_bloch[i] * (resp[i] * model.p[i]);
            }
            const auto &entry = assemblage.at(a, static_cast<int>(x));
            const Vec3 target_bloch = entry.bloch * entry.weight;
            const double dev = std::max(
                std::abs(weight - entry.weight),
                std::max(std::abs(bloch.x - target_bloch.x),
                         std::max(std::abs(bloch.y - target_bloch.y),
                                  std::abs(bloch.z - target_bloch.z))));
            check.max_dev = std::max(check.max_dev, dev);
        }
    }
    check.ok = check.max_dev <= tol;
    return check;
}

} // namespace compatrad
