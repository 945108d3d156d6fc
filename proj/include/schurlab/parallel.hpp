#pragma once

#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace schurlab {

// 0 = auto.  The SCHURLAB_THREADS environment variable overrides the request.
inline int resolve_threads(int requested = 0) {
    if (const char* env = std::getenv("SCHURLAB_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) requested = v;
    }
    if (requested <= 0) {
        const unsigned hc = std::thread::hardware_concurrency();
        requested = hc == 0 ? 1 : static_cast<int>(hc);
    }
    return requested;
}

// Runs fn(i) for i in [0, count); results must be written to per-index slots
// so aggregation stays order-independent.
inline void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
    threads = std::min(std::max(threads, 1), std::max(count, 1));
    if (threads == 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            for (int i = t; i < count; i += threads) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace schurlab
