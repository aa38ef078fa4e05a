// Copyright 2026 The twobar Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TWOBAR_PARALLEL_HPP
#define TWOBAR_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace twobar::detail {

/// Worker count for a --jobs style request; 0 means one per hardware thread.
inline unsigned resolve_jobs(unsigned jobs) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    return jobs;
}

/// Runs body(i) for i in [0, n) on up to `jobs` threads. Each index runs
/// exactly once; callers write results into slot i so output order never
/// depends on scheduling. The exception of the lowest failing index is
/// rethrown after all workers finish.
template <class Body>
void parallel_for(std::size_t n, unsigned jobs, Body&& body) {
    const std::size_t workers = std::min<std::size_t>(resolve_jobs(jobs), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    auto run = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                body(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace twobar::detail

#endif  // TWOBAR_PARALLEL_HPP
