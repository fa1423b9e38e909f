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

#include "core/weights.hpp"

#include <algorithm>
#include <cmath>

#include "core/geometry.hpp"
#include "core/lp.hpp"

namespace compatrad {

namespace {

/// Solves S z = r for symmetric positive semidefinite S (size <= 4) by
/// Gaussian elimination with rank detection; r must lie in the range of S.
std::vector<double> solve_psd(std::vector<std::vector<double>> S,
                              std::vector<double> r) {
    const std::size_t k = S.size();
    std::vector<int> perm(k);
    for (std::size_t i = 0; i < k; ++i)
        perm[i] = static_cast<int>(i);

    double scale = 1e-30;
    for (std::size_t i = 0; i < k; ++i)
        scale = std::max(scale, std::abs(S[i][i]));

    std::vector<double> z(k, 0.0);
    std::vector<std::size_t> pivots;
    for (std::size_t step = 0; step < k; ++step) {
        std::size_t p = step;
        for (std::size_t i = step; i < k; ++i)
            if (std::abs(S[i][i]) > std::abs(S[p][p]))
                p = i;
        if (std::abs(S[p][p]) < 1e-12 * scale)
            break; // remaining rows are numerically dependent
        std::swap(S[step], S[p]);
        for (auto &row : S)
            std::swap(row[step], row[p]);
        std::swap(r[step], r[p]);
        std::swap(perm[step], perm[p]);
        pivots.push_back(step);
        for (std::size_t i = step + 1; i < k; ++i) {
            const double f = S[i][step] / S[step][step];
            if (f == 0.0)
                continue;
            for (std::size_t j = step; j < k; ++j)
                S[i][j] -= f * S[step][j];
            r[i] -= f * r[step];
        }
    }
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const std::size_t i = *it;
        double acc = r[i];
        for (std::size_t j = i + 1; j < k; ++j)
            acc -= S[i][j] * z[j];
        z[i] = acc / S[i][i];
    }
    std::vector<double> out(k, 0.0);
    for (std::size_t i = 0; i < k; ++i)
        out[perm[i]] = z[i];
    return out;
}

/// Projection onto the affine set {x : A x = b}: x - A^T (A A^T)^+ (A x - b).
std::vector<double> project_affine(const std::vector<double> &y,
                                   const std::vector<std::vector<double>> &A,
                                   const std::vector<double> &b) {
    const std::size_t k = A.size();
    const std::size_t n = y.size();
    std::vector<std::vector<double>> gram(k, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            double s = 0.0;
            for (std::size_t t = 0; t < n; ++t)
                s += A[i][t] * A[j][t];
            gram[i][j] = gram[j][i] = s;
        }
    std::vector<double> resid(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        double s = -b[i];
        for (std::size_t t = 0; t < n; ++t)
            s += A[i][t] * y[t];
        resid[i] = s;
    }
    const auto lambda = solve_psd(gram, resid);
    std::vector<double> out = y;
    for (std::size_t t = 0; t < n; ++t) {
        double s = 0.0;
        for (std::size_t i = 0; i < k; ++i)
            s += A[i][t] * lambda[i];
        out[t] -= s;
    }
    return out;
}

double affine_residual(const std::vector<double> &x,
                       const std::vector<std::vector<double>> &A,
                       const std::vector<double> &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < A.size(); ++i) {
        double s = -b[i];
        for (std::size_t t = 0; t < x.size(); ++t)
            s += A[i][t] * x[t];
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

bool box_feasible_lp(const std::vector<std::vector<double>> &A,
                     const std::vector<double> &b, double hi, std::size_t n) {
    std::vector<lp::Constraint> cons;
    for (std::size_t i = 0; i < A.size(); ++i)
        cons.push_back({A[i], lp::Rel::eq, b[i]});
    if (std::isfinite(hi)) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<double> row(n, 0.0);
            row[j] = 1.0;
            cons.push_back({row, lp::Rel::le, hi});
        }
    }
    const auto sol = lp::solve_max(std::vector<double>(n, 0.0), cons);
    return sol.status == lp::Status::optimal;
}

} // namespace

std::optional<std::vector<double>>
project_box_affine(const std::vector<double> &y0,
                   const std::vector<std::vector<double>> &A,
                   const std::vector<double> &b, double lo, double hi) {
    const std::size_t n = y0.size();
    if (lo != 0.0)
        throw Error(ErrorCode::internal, "project_box_affine expects lo == 0");
    if (!box_feasible_lp(A, b, hi, n))
        return std::nullopt;

    // Dykstra's alternating projections between the box and the affine set.
    std::vector<double> x = y0, p(n, 0.0), q(n, 0.0);
    for (int iter = 0; iter < 20000; ++iter) {
        std::vector<double> xp(n);
        for (std::size_t j = 0; j < n; ++j)
            xp[j] = x[j] + p[j];
        const auto y = project_affine(xp, A, b);
        for (std::size_t j = 0; j < n; ++j)
            p[j] = xp[j] - y[j];
        double move = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double yq = y[j] + q[j];
            const double clamped = std::clamp(yq, lo, hi);
            move = std::max(move, std::abs(clamped - x[j]));
            q[j] = yq - clamped;
            x[j] = clamped;
        }
        if (move < 1e-14 && affine_residual(x, A, b) < 1e-12)
            break;
    }

    // Active-set polish: freeze components at the bounds and solve the
    // equality-constrained projection on the rest exactly.
    std::vector<int> free_idx;
    std::vector<double> fixed = x;
    for (std::size_t j = 0; j < n; ++j) {
        if (x[j] > lo + 1e-9 && x[j] < hi - 1e-9)
            free_idx.push_back(static_cast<int>(j));
        else
            fixed[j] = (x[j] <= lo + 1e-9) ? lo : hi;
    }
    if (!free_idx.empty()) {
        std::vector<std::vector<double>> Af(A.size(),
                                            std::vector<double>(free_idx.size()));
        std::vector<double> bf = b;
        for (std::size_t i = 0; i < A.size(); ++i) {
            for (std::size_t j = 0; j < n; ++j)
                if (x[j] <= lo + 1e-9 || x[j] >= hi - 1e-9)
                    bf[i] -= A[i][j] * fixed[j];
            for (std::size_t jj = 0; jj < free_idx.size(); ++jj)
                Af[i][jj] = A[i][free_idx[jj]];
        }
        std::vector<double> yf(free_idx.size());
        for (std::size_t jj = 0; jj < free_idx.size(); ++jj)
            yf[jj] = y0[free_idx[jj]];
        const auto polished = project_affine(yf, Af, bf);
        std::vector<double> candidate = fixed;
        bool in_box = true;
        for (std::size_t jj = 0; jj < free_idx.size(); ++jj) {
            candidate[free_idx[jj]] = polished[jj];
            if (polished[jj] < lo - 1e-9 || polished[jj] > hi + 1e-9)
                in_box = false;
        }
        if (in_box && affine_residual(candidate, A, b) < 1e-11) {
            for (auto &val : candidate)
                val = std::clamp(val, lo, hi);
            x = candidate;
        }
    }
    if (affine_residual(x, A, b) > 1e-10)
        return std::nullopt;
    return x;
}

namespace {

std::vector<std::vector<double>> weight_constraint_matrix(const std::vector<Vec3> &dirs) {
    const std::size_t n = dirs.size();
    std::vector<std::vector<double>> A(4, std::vector<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        A[0][j] = 1.0;
        A[1][j] = dirs[j].x;
        A[2][j] = dirs[j].y;
        A[3][j] = dirs[j].z;
    }
    return A;
}

} // namespace

std::optional<std::vector<double>> repair_weights(const std::vector<Vec3> &dirs,
                                                  const std::vector<double> &alpha0) {
    return project_box_affine(alpha0, weight_constraint_matrix(dirs),
                              {1.0, 0.0, 0.0, 0.0}, 0.0, 1.0);
}

bool feasible_weights_exist(const std::vector<Vec3> &dirs) {
    return box_feasible_lp(weight_constraint_matrix(dirs), {1.0, 0.0, 0.0, 0.0}, 1.0,
                           dirs.size());
}

std::optional<WeightOptimum> optimal_weights(const std::vector<Vec3> &dirs,
                                             bool planar) {
    const std::size_t n = dirs.size();
    std::vector<HyperplaneCandidate> candidates;
    try {
        candidates = facet_candidates_for(dirs, planar);
    } catch (const Error &) {
        return std::nullopt;
    }

    // Variables: alpha_0..alpha_{n-1}, t. Maximize t.
    std::vector<double> c(n + 1, 0.0);
    c[n] = 1.0;
    std::vector<lp::Constraint> cons;
    const auto A = weight_constraint_matrix(dirs);
    const std::vector<double> b = {1.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<double> row = A[i];
        row.push_back(0.0);
        cons.push_back({row, lp::Rel::eq, b[i]});
    }
    for (const auto &cand : candidates) {
        std::vector<double> row(n + 1, 0.0);
        for (std::size_t j = 0; j < n; ++j)
            row[j] = std::abs(cand.c0 + dot(cand.c, dirs[j]));
        row[n] = -1.0;
        cons.push_back({row, lp::Rel::ge, 0.0});
    }

    const auto sol = lp::solve_max(c, cons);
    if (sol.status != lp::Status::optimal)
        return std::nullopt;
    WeightOptimum out;
    out.alpha.assign(sol.x.begin(), sol.x.begin() + n);
    out.radius = sol.objective;
    return out;
}

} // namespace compatrad
