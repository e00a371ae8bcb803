#ifndef CENTREX_PARALLEL_HPP_
#define CENTREX_PARALLEL_HPP_

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace centrex {

// Worker count: explicit request wins, then CENTREX_THREADS, then hardware.
inline int resolve_threads(int requested = 0) {
    if (requested > 0)
        return requested;
    if (const char *env = std::getenv("CENTREX_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0)
            return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Contiguous [begin, end) chunks covering n items, at most parts of them.
inline std::vector<std::pair<std::size_t, std::size_t>> split_ranges(std::size_t n, int parts) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (n == 0)
        return out;
    const std::size_t chunks = std::min<std::size_t>(n, static_cast<std::size_t>(parts > 0 ? parts : 1));
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t begin = n * c / chunks;
        const std::size_t end = n * (c + 1) / chunks;
        if (begin < end)
            out.emplace_back(begin, end);
    }
    return out;
}

// Runs fn(begin, end) over chunks of [0, n). fn must only touch state owned
// by its own index range.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn &&fn) {
    const auto ranges = split_ranges(n, threads);
    if (ranges.size() <= 1) {
        for (const auto &[begin, end] : ranges)
            fn(begin, end);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(ranges.size());
    for (const auto &[begin, end] : ranges)
        pool.emplace_back([&fn, begin = begin, end = end] { fn(begin, end); });
    for (auto &t : pool)
        t.join();
}

// Chunk-local accumulation combined in chunk order. The combiner must be
// associative so the result is identical for every chunking, i.e. every
// worker count.
template <typename T, typename Map, typename Combine>
T parallel_reduce(std::size_t n, int threads, T init, Map &&per_chunk, Combine &&combine) {
    const auto ranges = split_ranges(n, threads);
    if (ranges.empty())
        return init;
    std::vector<T> partial(ranges.size(), init);
    if (ranges.size() == 1) {
        partial[0] = per_chunk(ranges[0].first, ranges[0].second);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(ranges.size());
        for (std::size_t c = 0; c < ranges.size(); ++c)
            pool.emplace_back([&, c] { partial[c] = per_chunk(ranges[c].first, ranges[c].second); });
        for (auto &t : pool)
            t.join();
    }
    T out = init;
    for (const T &p : partial)
        out = combine(out, p);
    return out;
}

} // namespace centrex

#endif // CENTREX_PARALLEL_HPP_
