/*
   Copyright 2026 The propact Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace propact {

/// Splits [0, count) into `chunks` contiguous ranges and runs
/// body(chunk, begin, end) for each, on up to `threads` workers.
/// Results must be written to per-chunk slots; the caller reduces them in
/// chunk order so the outcome does not depend on scheduling.
template <class Body>
void parallel_chunks(std::size_t count, std::size_t chunks, unsigned threads, Body&& body)
{
    if (chunks == 0) return;
    auto range = [&](std::size_t c) {
        return std::pair{count * c / chunks, count * (c + 1) / chunks};
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
    if (threads == 1) {
        for (std::size_t c = 0; c < chunks; ++c) {
            auto [b, e] = range(c);
            body(c, b, e);
        }
        return;
    }
    std::mutex mu;
    std::size_t next = 0;
    std::exception_ptr error;
    auto worker = [&] {
        for (;;) {
            std::size_t c;
            {
                std::lock_guard lock(mu);
                if (next == chunks || error) return;
                c = next++;
            }
            try {
                auto [b, e] = range(c);
                body(c, b, e);
            } catch (...) {
                std::lock_guard lock(mu);
                if (!error) error = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
}

inline std::size_t default_chunks(std::size_t count, unsigned threads)
{
    if (count == 0) return 0;
    return std::min<std::size_t>(count, std::max<std::size_t>(1, threads) * 8);
}

} // namespace propact
