// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BERGMAN_SRC_PARALLEL_HPP
#define BERGMAN_SRC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bergman::detail {

inline unsigned resolve_workers(unsigned requested)
{
    if (requested > 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls body(worker, index) for every index in [0, count). Indices are
/// handed out in chunks from a shared counter, so the assignment of
/// indices to workers is unspecified; callers must not depend on it.
template <class Body>
void parallel_for(std::int64_t count, unsigned workers, Body&& body, std::int64_t chunk = 16)
{
    workers = resolve_workers(workers);
    if (workers == 1 || count <= chunk)
    {
        for (std::int64_t i = 0; i < count; ++i)
            body(0u, i);
        return;
    }

    std::atomic<std::int64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&](unsigned worker) {
        try
        {
            for (;;)
            {
                std::int64_t begin = next.fetch_add(chunk);
                if (begin >= count)
                    break;
                std::int64_t end = std::min(count, begin + chunk);
                for (std::int64_t i = begin; i < end; ++i)
                    body(worker, i);
            }
        }
        catch (...)
        {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
            next.store(count);
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w)
        threads.emplace_back(run, w);
    run(0);
    for (auto& t : threads)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace bergman::detail

#endif
