#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace talc {

/// Splits [0, count) into contiguous chunks, runs `work` on each chunk on up
/// to `jobs` threads, and returns the per-chunk results in chunk order, so
/// any fold over them is deterministic regardless of the thread count.
template <typename R>
std::vector<R> parallel_chunks(std::size_t count, unsigned jobs,
                               const std::function<R(std::size_t, std::size_t)>& work) {
    if (jobs <= 1 || count < 2) {
        std::vector<R> out;
        if (count > 0) out.push_back(work(0, count));
        return out;
    }
    const std::size_t chunks = std::min<std::size_t>(jobs, count);
    std::vector<R> results(chunks);
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    const std::size_t step = (count + chunks - 1) / chunks;
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t lo = c * step;
        const std::size_t hi = std::min(count, lo + step);
        threads.emplace_back([&, c, lo, hi] { results[c] = work(lo, hi); });
    }
    for (auto& t : threads) t.join();
    return results;
}

}  // namespace talc
