// Copyright 2026 The Shadowguard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace shadowguard {

/// Worker count: SHADOWGUARD_THREADS if set, else hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("SHADOWGUARD_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1) {
            return static_cast<unsigned>(parsed);
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/**
 * @brief Runs body(i) for i in [0, count) on a small worker pool.
 *
 * Work items must be independent and write only to their own slots;
 * results are then deterministic regardless of scheduling. The first
 * exception thrown by any item is rethrown on the caller.
 */
inline void parallel_for(std::size_t count,
                         const std::function<void(std::size_t)>& body) {
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count || failed.load()) {
                    return;
                }
                try {
                    body(i);
                } catch (...) {
                    if (!failed.exchange(true)) {
                        failure = std::current_exception();
                    }
                    return;
                }
            }
        });
    }
    for (auto& thread : pool) {
        thread.join();
    }
    if (failed.load()) {
        std::rethrow_exception(failure);
    }
}

} // namespace shadowguard
