// Copyright 2026 The qmine Authors.
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
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace qmine {

/// Worker threads to use: hardware concurrency, at least 1.
unsigned worker_count();

/// Calls fn(i) for every i in [0, count), spreading indices over threads.
/// Each index is visited exactly once, so writes into a pre-sized vector
/// keep a deterministic order. If several calls throw, the exception from
/// the lowest index is rethrown.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn, unsigned threads = 0)
{
    if (count == 0)
        return;
    if (threads == 0)
        threads = worker_count();
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));

    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(work);
        for (auto& th : pool)
            th.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

}  // namespace qmine
