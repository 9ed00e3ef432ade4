#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace murmur {

/// Global worker-pool degree used by the parallel loops. Defaults to
/// hardware concurrency; 1 disables threading.
void set_parallelism(int degree);
int parallelism();

namespace detail {
inline std::atomic<int>& parallelism_degree() {
    static std::atomic<int> deg{0};
    return deg;
}
}  // namespace detail

inline void set_parallelism(int degree) { detail::parallelism_degree() = degree; }
inline int parallelism() {
    int d = detail::parallelism_degree().load();
    if (d <= 0) d = static_cast<int>(std::thread::hardware_concurrency());
    return d > 0 ? d : 1;
}

/// Deterministic chunked reduction: [0, n) is split into a fixed number of
/// chunks independent of thread count; partials combine in chunk order.
/// Partial must be default-constructible and support accumulate(a, b).
template <typename Partial, typename ChunkFn, typename CombineFn>
Partial parallel_reduce_chunks(int64_t n, ChunkFn&& chunk_fn, CombineFn&& combine,
                               Partial init, int n_chunks = 256) {
    if (n <= 0) return init;
    if (n_chunks > n) n_chunks = static_cast<int>(n);
    std::vector<Partial> partials(static_cast<std::size_t>(n_chunks));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int c = next.fetch_add(1);
            if (c >= n_chunks) return;
            const int64_t lo = n * c / n_chunks;
            const int64_t hi = n * (c + 1) / n_chunks;
            partials[static_cast<std::size_t>(c)] = chunk_fn(lo, hi);
        }
    };
    const int nt = std::min(parallelism(), n_chunks);
    if (nt <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(nt));
        for (int i = 0; i < nt; ++i) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    // pairwise tree combine in fixed order
    std::vector<Partial> level = std::move(partials);
    while (level.size() > 1) {
        std::vector<Partial> up;
        up.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2)
            up.push_back(combine(level[i], level[i + 1]));
        if (level.size() & 1) up.push_back(level.back());
        level = std::move(up);
    }
    return combine(init, level[0]);
}

}  // namespace murmur
