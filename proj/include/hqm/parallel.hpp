#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace hqm {

/// Worker count: HQM_THREADS when set to a positive integer, else the hardware concurrency.
inline unsigned thread_count()
{
    if (const char* env = std::getenv("HQM_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v > 0)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

/*
 * Calls fn(i) for every i in [0, n). Callers write into per-index slots, so
 * the result never depends on scheduling. The first exception is rethrown.
 */
template <class F>
void parallel_for(size_t n, F&& fn)
{
    const unsigned workers = std::min<size_t>(thread_count(), n);
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mu);
                    if (!error)
                        error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace hqm
