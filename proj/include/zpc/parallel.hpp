#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace zpc {

// Apply fn(i) for i in [0, n) across a small thread pool and return results
// in index order.  Each work item is independent and internally deterministic,
// so the output does not depend on scheduling; only the merge order (fixed)
// touches the combined result.
template <class T, class Fn>
std::vector<T> parallel_map_ordered(std::size_t n, Fn&& fn) {
    std::vector<T> out(n);
    if (n == 0) return out;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers > n) workers = static_cast<unsigned>(n);
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            try {
                for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                    out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                next.store(n);  // drain remaining work
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

}  // namespace zpc
