#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gaussinterp::detail {

inline thread_local bool in_parallel_region = false;

/// Runs body(i) for i in [0, n) on up to hardware_concurrency threads.
/// Each index is handled exactly once, so results written by index are
/// independent of scheduling. The first exception is rethrown. Calls made from
/// inside a worker run serially.
template <class Body>
void parallel_for(std::size_t n, Body&& body, std::size_t min_chunk = 32) {
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min(hw, (n + min_chunk - 1) / std::max<std::size_t>(min_chunk, 1));
    if (workers <= 1 || in_parallel_region) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            in_parallel_region = true;
            try {
                for (std::size_t i = w; i < n; i += workers) body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace gaussinterp::detail
