#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace axisflow {

/// Worker count for parallel sections: AXISFLOW_THREADS if set, else 1.
/// Partitions are static, so results are bitwise identical for any count.
inline int configured_thread_count() {
    if (const char* env = std::getenv("AXISFLOW_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return std::min(n, 256);
    }
    return 1;
}

/// Run fn(begin, end) over a static partition of [0, n).
inline void parallel_for(int n, const std::function<void(int, int)>& fn,
                         int n_threads = configured_thread_count()) {
    if (n_threads <= 1 || n < 2 * n_threads) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    const int chunk = (n + n_threads - 1) / n_threads;
    for (int t = 0; t < n_threads; ++t) {
        const int b = t * chunk;
        const int e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, b, e] { fn(b, e); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace axisflow
