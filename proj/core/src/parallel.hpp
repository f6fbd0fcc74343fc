#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace choreme::detail {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(index, worker) for index in [0, count) on up to `threads`
/// workers pulling indices dynamically. The first exception is rethrown.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
    threads = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i, 0u);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                    if (i >= count) return;
                    try {
                        body(i, w);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) error = std::current_exception();
                        next.store(count);
                        return;
                    }
                }
            });
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace choreme::detail
