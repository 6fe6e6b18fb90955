#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace ccd {

inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

// Split [0, count) into one contiguous chunk per worker and run
// fn(worker_index, begin, end) on each. Callers merge per-worker results in
// worker index order, so the outcome never depends on scheduling.
inline void parallel_chunks(uint64_t count, unsigned workers,
                            const std::function<void(unsigned, uint64_t, uint64_t)>& fn) {
    if (workers <= 1 || count <= 1) {
        fn(0, 0, count);
        return;
    }
    if (workers > count) workers = static_cast<unsigned>(count);
    uint64_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        uint64_t begin = static_cast<uint64_t>(w) * chunk;
        uint64_t end = begin + chunk < count ? begin + chunk : count;
        if (begin >= end) break;
        pool.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace ccd
