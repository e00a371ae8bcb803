#ifndef CENTREX_METRICS_HPP_
#define CENTREX_METRICS_HPP_

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "centrex/common.hpp"
#include "centrex/graph.hpp"
#include "centrex/parallel.hpp"
#include "centrex/rng.hpp"

namespace centrex {

struct AvgDistanceResult {
    double mean = 0.0;
    std::uint64_t pairs_counted = 0; // reachable pairs entering the mean
    std::uint64_t unreachable = 0;   // pairs excluded
};

// Mean hop distance over reachable node pairs (unordered when undirected).
// sample_pairs 0 sweeps every pair exactly once; otherwise that many pairs
// are drawn uniformly with replacement.
inline AvgDistanceResult avg_distance(const Graph &g, std::size_t sample_pairs, const Rng &rng,
                                      int threads = 1) {
    if (g.node_count() == 0)
        throw ValidationError({"average distance of an empty graph"});
    const int workers = resolve_threads(threads);
    const NodeId n = g.node_count();

    struct Acc {
        std::uint64_t total = 0;
        std::uint64_t counted = 0;
        std::uint64_t unreachable = 0;
    };
    auto combine = [](Acc a, Acc b) {
        return Acc{a.total + b.total, a.counted + b.counted, a.unreachable + b.unreachable};
    };

    Acc acc;
    if (sample_pairs == 0) {
        acc = parallel_reduce<Acc>(
            n, workers, Acc{},
            [&](std::size_t begin, std::size_t end) {
                Acc local;
                for (std::size_t s = begin; s < end; ++s) {
                    const DistanceField field = bfs(g, static_cast<NodeId>(s));
                    for (NodeId t = g.directed() ? 0 : static_cast<NodeId>(s) + 1; t < n; ++t) {
                        if (t == s)
                            continue;
                        if (field.dist[t] == kUnreachable)
                            ++local.unreachable;
                        else {
                            local.total += field.dist[t];
                            ++local.counted;
                        }
                    }
                }
                return local;
            },
            combine);
    } else {
        const Rng root = rng;
        acc = parallel_reduce<Acc>(
            sample_pairs, workers, Acc{},
            [&](std::size_t begin, std::size_t end) {
                Acc local;
                for (std::size_t i = begin; i < end; ++i) {
                    Rng r = root.split(i);
                    const NodeId s = static_cast<NodeId>(r.below(n));
                    NodeId t = static_cast<NodeId>(r.below(n - 1));
                    if (t >= s)
                        ++t;
                    const DistanceField field = bfs(g, s);
                    if (field.dist[t] == kUnreachable)
                        ++local.unreachable;
                    else {
                        local.total += field.dist[t];
                        ++local.counted;
                    }
                }
                return local;
            },
            combine);
    }

    AvgDistanceResult out;
    out.pairs_counted = acc.counted;
    out.unreachable = acc.unreachable;
    out.mean = acc.counted ? static_cast<double>(acc.total) / static_cast<double>(acc.counted) : 0.0;
    return out;
}

// Multi-source forward BFS: d(v) = min over targets x of d(x, v).
inline std::vector<Distance> distances_from_set(const Graph &g, const std::vector<NodeId> &sources) {
    std::vector<Distance> dist(g.node_count(), kUnreachable);
    std::vector<NodeId> frontier;
    for (NodeId x : sources) {
        dist[x] = 0;
        frontier.push_back(x);
    }
    std::vector<NodeId> next;
    while (!frontier.empty()) {
        next.clear();
        for (NodeId u : frontier)
            for (NodeId v : g.neighbors(u))
                if (dist[v] == kUnreachable) {
                    dist[v] = dist[u] + 1;
                    next.push_back(v);
                }
        frontier.swap(next);
    }
    return dist;
}

struct ClosenessResult {
    double value = 0.0;
    std::uint64_t reachable = 0;
    std::uint64_t unreachable = 0;
};

// Group closeness: (number of reachable outside nodes) / (sum of their
// distances to the nearest target). Unreachable nodes are excluded and
// counted separately.
inline ClosenessResult closeness(const Graph &g, const std::vector<NodeId> &targets) {
    if (targets.empty())
        throw ValidationError({"closeness of an empty target set"});
    const auto dist = distances_from_set(g, targets);
    const auto mask = make_mask(g.node_count(), targets);

    ClosenessResult out;
    std::uint64_t total = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (mask[v])
            continue;
        if (dist[v] == kUnreachable)
            ++out.unreachable;
        else {
            total += dist[v];
            ++out.reachable;
        }
    }
    out.value = total ? static_cast<double>(out.reachable) / static_cast<double>(total) : 0.0;
    return out;
}

inline std::uint64_t reachable_from(const Graph &g, const std::vector<NodeId> &sources) {
    const auto dist = distances_from_set(g, sources);
    const auto mask = make_mask(g.node_count(), sources);
    std::uint64_t count = 0;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (!mask[v] && dist[v] != kUnreachable)
            ++count;
    return count;
}

// Independent-cascade influence: each edge is live with the given
// probability (one coin per undirected edge, per arc when directed) and a
// trial activates everything reachable from the seeds over live edges.
// Returns the Monte Carlo mean activated-set size. Trial i uses the rng
// stream split at i, so worker count cannot change the estimate.
inline double ic_influence(const Graph &g, const std::vector<NodeId> &seeds, double probability,
                           std::size_t trials, const Rng &rng, int threads = 1) {
    if (!(probability >= 0.0 && probability <= 1.0))
        throw ValidationError({"cascade probability must lie in [0, 1]"});
    if (trials == 0)
        throw ValidationError({"cascade needs at least one trial"});
    const int workers = resolve_threads(threads);
    const Rng root = rng;

    const std::uint64_t total = parallel_reduce<std::uint64_t>(
        trials, workers, 0,
        [&](std::size_t begin, std::size_t end) {
            std::uint64_t local = 0;
            std::vector<char> active(g.node_count());
            std::vector<NodeId> frontier, next;
            std::unordered_map<std::uint64_t, bool> coin;
            for (std::size_t trial = begin; trial < end; ++trial) {
                Rng r = root.split(trial);
                std::fill(active.begin(), active.end(), 0);
                coin.clear();
                frontier.clear();
                for (NodeId x : seeds) {
                    if (!active[x]) {
                        active[x] = 1;
                        frontier.push_back(x);
                    }
                }
                std::uint64_t activated = frontier.size();
                while (!frontier.empty()) {
                    next.clear();
                    for (NodeId u : frontier) {
                        for (NodeId v : g.neighbors(u)) {
                            if (active[v])
                                continue;
                            const std::uint64_t key = detail::edge_key(u, v, g.directed());
                            auto [it, fresh] = coin.try_emplace(key, false);
                            if (fresh)
                                it->second = r.chance(probability);
                            if (it->second) {
                                active[v] = 1;
                                ++activated;
                                next.push_back(v);
                            }
                        }
                    }
                    frontier.swap(next);
                }
                local += activated;
            }
            return local;
        },
        std::plus<>());

    return static_cast<double>(total) / static_cast<double>(trials);
}

// Relative improvement in percent, signed so that improvement is positive:
// for quantities where smaller is better, pass decrease_is_better.
inline double improvement_percent(double before, double after, bool decrease_is_better = false) {
    if (before == 0.0)
        return 0.0;
    const double delta = decrease_is_better ? before - after : after - before;
    return 100.0 * delta / before;
}

} // namespace centrex

#endif // CENTREX_METRICS_HPP_
