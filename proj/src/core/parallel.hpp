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

#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace compatrad {

/// Worker count: hardware concurrency capped by the COMPAT_THREADS
/// environment variable (a value of 1 disables threading).
inline unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0)
        n = 1;
    if (const char *env = std::getenv("COMPAT_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < n)
            n = static_cast<unsigned>(cap);
    }
    return n;
}

/// Runs fn(i) for i in [0, count) on a small pool. Each index is processed
/// exactly once; callers own any per-index output slots, which keeps the
/// result independent of scheduling.
template <typename Fn> void parallel_for(long count, Fn &&fn) {
    const unsigned workers =
        std::min<unsigned>(worker_count(), count > 0 ? static_cast<unsigned>(count) : 1u);
    if (workers <= 1) {
        for (long i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const long i = next.fetch_add(1);
                if (i >= count)
                    return;
                fn(i);
            }
        });
    }
    for (auto &t : pool)
        t.join();
}

} // namespace compatrad
