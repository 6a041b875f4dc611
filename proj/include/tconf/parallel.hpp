#ifndef TCONF_PARALLEL_HPP
#define TCONF_PARALLEL_HPP

#include <cstdint>
#include <thread>
#include <vector>

namespace tconf {

// Chunked parallel loop over [0, count). Every simulation indexes its RNG
// stream by the loop variable, so the result does not depend on the number of
// workers or on scheduling.
template <typename Fn>
void parallel_for(std::int64_t count, Fn&& fn) {
    unsigned workers = std::thread::hardware_concurrency();
    if (workers <= 1 || count < 1024) {
        for (std::int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    if (static_cast<std::int64_t>(workers) > count) workers = static_cast<unsigned>(count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::int64_t i = w; i < count; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace tconf

#endif
