#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace tesler {

// Runs fn(i) for i in [0, count), fanning out over up to jobs threads.
// Callers write results into slot i only, so the output is identical for
// any job count.  An explicit jobs value is honored even beyond the core
// count; oversubscription is harmless here.
template <class F>
void parallel_for(std::size_t count, int jobs, F&& fn) {
    if (jobs < 1) jobs = 1;
    if (jobs == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace tesler
