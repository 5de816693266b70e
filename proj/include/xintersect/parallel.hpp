// Static job partitioning over a fixed pool of worker threads.
#pragma once

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace xintersect {

/// XINTERSECT_THREADS if set to a positive integer, else hardware concurrency.
inline std::size_t default_worker_count()
{
    if (const char* env = std::getenv("XINTERSECT_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            // fall through to the hardware default
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(job, state) for job in [0, jobs) on `workers` threads, each with
/// its own State. Returns the per-worker states; merging them is the
/// caller's job and must not depend on which worker ran which job.
template <typename State, typename Fn>
std::vector<State> run_jobs(std::size_t jobs, std::size_t workers, Fn&& fn)
{
    if (workers == 0) workers = 1;
    if (workers > jobs) workers = jobs == 0 ? 1 : jobs;
    std::vector<State> states(workers);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto body = [&](std::size_t w) {
        try {
            for (std::size_t job = next++; job < jobs; job = next++) fn(job, states[w]);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    if (workers == 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body, w);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return states;
}

}  // namespace xintersect
