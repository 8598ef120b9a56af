#ifndef CYLSCHUR_PARALLEL_HPP
#define CYLSCHUR_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace cylschur {

// Worker count: CYLSCHUR_WORKERS when set, hardware concurrency otherwise.
inline int worker_count() {
    if (const char* env = std::getenv("CYLSCHUR_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, count) on a bounded pool.  Tasks must be
// independent; result ordering is the caller's concern.
inline void parallel_for(int count, const std::function<void(int)>& fn) {
    int workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace cylschur

#endif
