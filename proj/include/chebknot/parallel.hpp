#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace chebknot {

/// Worker cap from CHEBKNOT_THREADS (0 or unset = hardware concurrency).
inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("CHEBKNOT_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return hw;
}

/// Splits [begin, end) into contiguous chunks, one worker each:
/// fn(worker_index, lo, hi). Results must be merged commutatively by the
/// caller so the outcome is independent of the partitioning.
template <class Fn>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, Fn&& fn) {
    std::uint64_t total = end > begin ? end - begin : 0;
    std::uint64_t workers = worker_count();
    if (workers > total) workers = total == 0 ? 1 : total;
    if (workers <= 1) {
        fn(0u, begin, end);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::uint64_t chunk = total / workers;
    std::uint64_t extra = total % workers;
    std::uint64_t lo = begin;
    for (std::uint64_t w = 0; w < workers; ++w) {
        std::uint64_t hi = lo + chunk + (w < extra ? 1 : 0);
        threads.emplace_back([&fn, w, lo, hi] { fn(static_cast<unsigned>(w), lo, hi); });
        lo = hi;
    }
    for (auto& t : threads) t.join();
}

} // namespace chebknot
