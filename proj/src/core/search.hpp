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
 * Randomized maximization of the compatibility radius over n-outcome
 * parent POVMs: uniform sampling plus annealed local refinement of the
 * directions, with weights kept feasible (and, on accepted moves,
 * re-optimized exactly by a linear program).
 */

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/povm.hpp"
#include "core/radius.hpp"

namespace compatrad {

struct SearchConfig {
    int n = 4;
    bool planar = false;
    long samples = 1000;
    int refine_iters = 100;
    std::uint64_t seed = 0;
    std::optional<long> time_budget_ms;
};

struct SearchResult {
    QubitPOVM best_povm;
    double best_radius = 0.0;
    std::vector<std::pair<long, double>> history; // (sample index, radius so far)
    std::uint64_t seed = 0;
};

/// One random valid rank-1 parent POVM: directions uniform on the sphere
/// (circle when planar), flat-simplex weights projected onto the feasible
/// polytope, resampling on infeasibility. Three-outcome non-planar POVMs
/// only exist with coplanar directions, so that case samples a random
/// great circle first.
QubitPOVM sample_povm(int n, bool planar, std::uint64_t seed);

/// Best radius over `samples` random starts, each refined for
/// `refine_iters` rounds. Deterministic for a fixed config; samples are
/// evaluated in parallel and reduced by index.
SearchResult maximize_radius(const SearchConfig &cfg);

} // namespace compatrad
