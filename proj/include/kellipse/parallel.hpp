#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace kellipse {

/// Worker count: KELLIPSE_THREADS overrides hardware concurrency.
inline int parallelism() {
    if (const char* env = std::getenv("KELLIPSE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Runs fn(i) for i in [0, n). Each index owns its output slot, so results
/// are identical for every worker count.
template <class Fn>
void parallel_for(int n, Fn&& fn) {
    int workers = std::min(parallelism(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w]() {
            for (int i = w; i < n; i += workers) fn(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace kellipse
