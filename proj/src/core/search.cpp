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

#include "core/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>

#include "core/geometry.hpp"
#include "core/parallel.hpp"
#include "core/rng.hpp"
#include "core/weights.hpp"

namespace compatrad {

namespace {

constexpr int kMaxSampleAttempts = 1000;

std::vector<double> flat_simplex(Rng &rng, int n) {
    std::vector<double> w(n);
    double total = 0.0;
    for (auto &v : w) {
        v = -std::log(1.0 - rng.uniform());
        total += v;
    }
    for (auto &v : w)
        v /= total;
    return w;
}

std::vector<Vec3> sample_directions(Rng &rng, int n, bool planar) {
    std::vector<Vec3> dirs(n);
    if (planar) {
        for (auto &d : dirs)
            d = rng.unit_vector_planar();
        return dirs;
    }
    if (n == 3) {
        // A valid rank-1 3-outcome POVM forces the directions into a common
        // plane through the origin, so sample on a random great circle.
        const Vec3 normal = rng.unit_vector();
        const Vec3 u = any_orthogonal(normal);
        const Vec3 v = cross(normal, u);
        for (auto &d : dirs) {
            const double angle = 2.0 * M_PI * rng.uniform();
            d = u * std::cos(angle) + v * std::sin(angle);
        }
        return dirs;
    }
    for (auto &d : dirs)
        d = rng.unit_vector();
    return dirs;
}

/// Weight vectors with a vanishing component would silently reduce the
/// outcome count, so sampling and LP adoption both insist on a floor.
bool usable_weights(const std::vector<double> &alpha) {
    return std::all_of(alpha.begin(), alpha.end(),
                       [](double a) { return a >= 1e-9; });
}

double radius_for(const std::vector<Vec3> &dirs, const std::vector<double> &alpha,
                  bool planar) {
    const auto candidates = facet_candidates_for(dirs, planar);
    double best = std::numeric_limits<double>::infinity();
    for (const auto &cand : candidates) {
        double val = 0.0;
        for (std::size_t i = 0; i < dirs.size(); ++i)
            val += alpha[i] * std::abs(cand.c0 + dot(cand.c, dirs[i]));
        best = std::min(best, val);
    }
    return best;
}

QubitPOVM build_rank1(const std::vector<Vec3> &dirs, const std::vector<double> &alpha,
                      bool planar) {
    std::vector<QubitEffect> effects;
    effects.reserve(dirs.size());
    for (std::size_t i = 0; i < dirs.size(); ++i)
        effects.push_back({alpha[i], 1.0, dirs[i]});
    return make_povm(std::move(effects), planar);
}

struct SampleOutcome {
    bool completed = false;
    double radius = -1.0;
    std::vector<Vec3> dirs;
    std::vector<double> alpha;
};

/// Refines one random start: Gaussian direction perturbations with an
/// annealed scale, weight feasibility repair per proposal, and an exact
/// LP re-optimization of the weights at the start, periodically on
/// accepted moves, and at the end.
SampleOutcome run_sample(const SearchConfig &cfg, std::uint64_t sample_seed) {
    Rng rng(sample_seed);
    SampleOutcome out;

    std::vector<Vec3> dirs;
    std::vector<double> alpha;
    bool found = false;
    for (int attempt = 0; attempt < kMaxSampleAttempts && !found; ++attempt) {
        dirs = sample_directions(rng, cfg.n, cfg.planar);
        const auto repaired = repair_weights(dirs, flat_simplex(rng, cfg.n));
        if (repaired && usable_weights(*repaired)) {
            alpha = *repaired;
            found = true;
        }
    }
    if (!found)
        throw Error(ErrorCode::sampling_stuck,
                    "no feasible random POVM after 1000 attempts");

    double value = radius_for(dirs, alpha, cfg.planar);
    if (const auto opt = optimal_weights(dirs, cfg.planar);
        opt && opt->radius > value && usable_weights(opt->alpha)) {
        alpha = opt->alpha;
        value = opt->radius;
    }

    double sigma = 0.35;
    int accepts_since_lp = 0;
    for (int round = 0; round < cfg.refine_iters; ++round) {
        std::vector<Vec3> proposal(dirs.size());
        if (cfg.planar) {
            for (std::size_t i = 0; i < dirs.size(); ++i) {
                const double angle =
                    std::atan2(dirs[i].z, dirs[i].x) + sigma * rng.normal();
                proposal[i] = {std::cos(angle), 0.0, std::sin(angle)};
            }
        } else {
            for (std::size_t i = 0; i < dirs.size(); ++i) {
                const Vec3 u = any_orthogonal(dirs[i]);
                const Vec3 v = cross(dirs[i], u);
                proposal[i] = normalized(dirs[i] + u * (sigma * rng.normal()) +
                                         v * (sigma * rng.normal()));
            }
        }
        const auto repaired = repair_weights(proposal, alpha);
        bool accepted = false;
        if (repaired) {
            const double trial = radius_for(proposal, *repaired, cfg.planar);
            if (trial > value) {
                dirs = std::move(proposal);
                alpha = *repaired;
                value = trial;
                accepted = true;
                if (++accepts_since_lp >= 20) {
                    accepts_since_lp = 0;
                    if (const auto opt = optimal_weights(dirs, cfg.planar);
                        opt && opt->radius > value && usable_weights(opt->alpha)) {
                        alpha = opt->alpha;
                        value = opt->radius;
                    }
                }
            }
        }
        if (!accepted)
            sigma = std::max(sigma * 0.95, 1e-5);
    }

    if (const auto opt = optimal_weights(dirs, cfg.planar);
        opt && opt->radius > value && usable_weights(opt->alpha)) {
        alpha = opt->alpha;
        value = opt->radius;
    }

    out.completed = true;
    out.radius = value;
    out.dirs = std::move(dirs);
    out.alpha = std::move(alpha);
    return out;
}

} // namespace

QubitPOVM sample_povm(int n, bool planar, std::uint64_t seed) {
    if (n < 3)
        throw Error(ErrorCode::out_of_range, "sample_povm requires n >= 3");
    Rng rng(seed);
    for (int attempt = 0; attempt < kMaxSampleAttempts; ++attempt) {
        const auto dirs = sample_directions(rng, n, planar);
        const auto repaired = repair_weights(dirs, flat_simplex(rng, n));
        if (repaired && usable_weights(*repaired))
            return build_rank1(dirs, *repaired, planar);
    }
    throw Error(ErrorCode::sampling_stuck,
                "no feasible random POVM after 1000 attempts");
}

SearchResult maximize_radius(const SearchConfig &cfg) {
    if (cfg.n < 3)
        throw Error(ErrorCode::out_of_range, "search requires n >= 3");
    if (cfg.samples < 1)
        throw Error(ErrorCode::out_of_range, "search requires samples >= 1");

    const auto start_time = std::chrono::steady_clock::now();
    auto budget_left = [&]() {
        if (!cfg.time_budget_ms)
            return true;
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start_time)
                                 .count();
        return elapsed < *cfg.time_budget_ms;
    };

    std::vector<SampleOutcome> outcomes(cfg.samples);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    parallel_for(cfg.samples, [&](long i) {
        if (!budget_left())
            return;
        try {
            outcomes[i] = run_sample(cfg, cfg.seed ^ static_cast<std::uint64_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error)
                first_error = std::current_exception();
        }
    });
    if (first_error)
        std::rethrow_exception(first_error);

    SearchResult result;
    result.seed = cfg.seed;
    long completed = 0;
    double best = -std::numeric_limits<double>::infinity();
    long best_index = -1;
    for (long i = 0; i < cfg.samples; ++i) {
        if (!outcomes[i].completed)
            continue;
        ++completed;
        if (outcomes[i].radius > best) {
            best = outcomes[i].radius;
            best_index = i;
            result.history.emplace_back(i, best);
        }
    }
    if (completed == 0)
        throw Error(ErrorCode::budget_exhausted,
                    "time budget exhausted before any sample completed");

    result.best_povm =
        build_rank1(outcomes[best_index].dirs, outcomes[best_index].alpha, cfg.planar);
    result.best_radius = compat_radius(result.best_povm).value;
    return result;
}

} // namespace compatrad
