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

#include "core/lp.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

namespace compatrad::lp {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kFeasTol = 1e-9;

struct Tableau {
    // Rows: m constraints plus one objective row at the bottom.
    // Columns: all structural/slack/artificial variables plus rhs.
    std::size_t m = 0;
    std::size_t cols = 0; // number of variable columns (rhs excluded)
    std::vector<std::vector<double>> t;
    std::vector<int> basis;

    double &at(std::size_t r, std::size_t c) { return t[r][c]; }

    void pivot(std::size_t pr, std::size_t pc) {
        const double p = t[pr][pc];
        for (auto &v : t[pr])
            v /= p;
        for (std::size_t r = 0; r <= m; ++r) {
            if (r == pr)
                continue;
            const double f = t[r][pc];
            if (f == 0.0)
                continue;
            for (std::size_t c = 0; c <= cols; ++c)
                t[r][c] -= f * t[pr][c];
        }
        basis[pr] = static_cast<int>(pc);
    }

    /// Bland's rule: first column with negative reduced cost, leaving row by
    /// min-ratio with smallest basis index on ties.
    Status iterate(const std::vector<bool> &allowed) {
        for (;;) {
            std::size_t pc = cols;
            for (std::size_t c = 0; c < cols; ++c) {
                if (allowed[c] && t[m][c] < -kPivotTol) {
                    pc = c;
                    break;
                }
            }
            if (pc == cols)
                return Status::optimal;
            std::size_t pr = m;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < m; ++r) {
                if (t[r][pc] > kPivotTol) {
                    const double ratio = t[r][cols] / t[r][pc];
                    if (ratio < best_ratio - 1e-12 ||
                        (ratio < best_ratio + 1e-12 &&
                         (pr == m || basis[r] < basis[pr]))) {
                        best_ratio = ratio;
                        pr = r;
                    }
                }
            }
            if (pr == m)
                return Status::unbounded;
            pivot(pr, pc);
        }
    }
};

} // namespace

Solution solve_max(const std::vector<double> &c, const std::vector<Constraint> &cons) {
    const std::size_t n = c.size();
    const std::size_t m = cons.size();

    // Normalize rows to nonnegative rhs and count extra columns.
    std::vector<std::vector<double>> rows(m);
    std::vector<Rel> rels(m);
    std::vector<double> rhs(m);
    std::size_t n_slack = 0;
    for (std::size_t r = 0; r < m; ++r) {
        rows[r] = cons[r].a;
        rows[r].resize(n, 0.0);
        rels[r] = cons[r].rel;
        rhs[r] = cons[r].b;
        if (rhs[r] < 0.0) {
            for (auto &v : rows[r])
                v = -v;
            rhs[r] = -rhs[r];
            if (rels[r] == Rel::le)
                rels[r] = Rel::ge;
            else if (rels[r] == Rel::ge)
                rels[r] = Rel::le;
        }
        if (rels[r] != Rel::eq)
            ++n_slack;
    }

    Tableau tab;
    tab.m = m;
    tab.cols = n + n_slack + m; // artificials for every row keep the code simple
    tab.t.assign(m + 1, std::vector<double>(tab.cols + 1, 0.0));
    tab.basis.assign(m, -1);

    std::size_t slack_at = n;
    const std::size_t art_at = n + n_slack;
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < n; ++j)
            tab.at(r, j) = rows[r][j];
        if (rels[r] == Rel::le)
            tab.at(r, slack_at++) = 1.0;
        else if (rels[r] == Rel::ge)
            tab.at(r, slack_at++) = -1.0;
        tab.at(r, art_at + r) = 1.0;
        tab.at(r, tab.cols) = rhs[r];
        tab.basis[r] = static_cast<int>(art_at + r);
    }

    // Phase 1: minimize the sum of artificials.
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t cidx = 0; cidx <= tab.cols; ++cidx)
            tab.at(m, cidx) -= tab.at(r, cidx);
    for (std::size_t r = 0; r < m; ++r)
        tab.at(m, art_at + r) = 0.0;

    std::vector<bool> allowed(tab.cols, true);
    for (std::size_t r = 0; r < m; ++r)
        allowed[art_at + r] = false;

    if (tab.iterate(allowed) != Status::optimal)
        return {Status::infeasible, 0.0, {}};
    if (tab.at(m, tab.cols) < -kFeasTol)
        return {Status::infeasible, 0.0, {}};

    // Drive remaining artificials out of the basis where possible.
    for (std::size_t r = 0; r < m; ++r) {
        if (tab.basis[r] < static_cast<int>(art_at))
            continue;
        std::size_t pc = tab.cols;
        for (std::size_t cidx = 0; cidx < art_at; ++cidx) {
            if (std::abs(tab.at(r, cidx)) > kPivotTol) {
                pc = cidx;
                break;
            }
        }
        if (pc != tab.cols)
            tab.pivot(r, pc);
        // Otherwise the row is redundant; the artificial stays basic at zero.
    }

    // Phase 2 objective.
    for (std::size_t cidx = 0; cidx <= tab.cols; ++cidx)
        tab.at(m, cidx) = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        tab.at(m, j) = -c[j];
    for (std::size_t r = 0; r < m; ++r) {
        const int b = tab.basis[r];
        const double f = tab.at(m, b);
        if (f == 0.0)
            continue;
        for (std::size_t cidx = 0; cidx <= tab.cols; ++cidx)
            tab.at(m, cidx) -= f * tab.at(r, cidx);
    }

    const Status st = tab.iterate(allowed);
    if (st == Status::unbounded)
        return {Status::unbounded, 0.0, {}};

    Solution sol;
    sol.status = Status::optimal;
    sol.x.assign(n, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
        const int b = tab.basis[r];
        if (b >= 0 && b < static_cast<int>(n))
            sol.x[b] = tab.at(r, tab.cols);
    }
    sol.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        sol.objective += c[j] * sol.x[j];
    return sol;
}

} // namespace compatrad::lp
