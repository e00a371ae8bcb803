#ifndef CENTREX_COVERAGE_HPP_
#define CENTREX_COVERAGE_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "centrex/common.hpp"
#include "centrex/graph.hpp"
#include "centrex/parallel.hpp"
#include "centrex/rng.hpp"

namespace centrex {

// The set of node pairs whose coverage is being optimized. The default is
// every pair of non-target nodes: unordered for undirected graphs, ordered
// for directed ones. An explicit list restricts it further.
struct PairUniverse {
    bool all_pairs = true;
    std::vector<std::pair<NodeId, NodeId>> pairs; // explicit mode only

    static PairUniverse all() { return {}; }

    static PairUniverse explicit_pairs(std::vector<std::pair<NodeId, NodeId>> list) {
        PairUniverse u;
        u.all_pairs = false;
        u.pairs = std::move(list);
        return u;
    }

    // Pair count in the universe's own convention (unordered when undirected).
    std::uint64_t size(const Graph &g, const std::vector<NodeId> &targets) const {
        if (!all_pairs)
            return pairs.size();
        const std::uint64_t r = g.node_count() - targets.size();
        return g.directed() ? r * (r - 1) : r * (r - 1) / 2;
    }
};

// Coverage tally over a pair universe. covered + uncovered == universe holds
// in the universe's own convention; the *_ordered accessors expose the
// ordered-pair convention the sampling formulas are stated in (each
// undirected pair counted in both orientations).
struct CoverageState {
    std::uint64_t covered = 0;
    std::uint64_t uncovered = 0;
    std::uint64_t universe = 0;
    bool ordered_pairs = false;

    std::uint64_t covered_ordered() const { return ordered_pairs ? covered : 2 * covered; }
    std::uint64_t uncovered_ordered() const { return ordered_pairs ? uncovered : 2 * uncovered; }
    std::uint64_t universe_ordered() const { return ordered_pairs ? universe : 2 * universe; }
};

// Distance fields anchored at the target nodes: from_target[i] holds
// d(x_i, .), to_target[i] holds d(., x_i). For undirected graphs the two are
// the same field.
struct TargetFields {
    std::vector<NodeId> ids;
    std::vector<DistanceField> from_target;
    std::vector<DistanceField> to_target;

    TargetFields(const Graph &g, const std::vector<NodeId> &targets) : ids(targets) {
        from_target.reserve(targets.size());
        to_target.reserve(targets.size());
        for (NodeId x : targets) {
            from_target.push_back(bfs(g, x));
            to_target.push_back(g.directed() ? bfs(g, x, /*reversed=*/true) : from_target.back());
        }
    }
};

namespace detail {

// Core predicate given d(s, t) and the target anchor fields: some target
// lies on a shortest s-t path iff its detour sum matches d(s, t) exactly.
// A target coinciding with an endpoint is not interior and never counts.
inline bool covered_via_targets(const TargetFields &tf, NodeId s, NodeId t, Distance dst) {
    if (dst == kUnreachable)
        return false;
    for (std::size_t i = 0; i < tf.from_target.size(); ++i) {
        if (tf.ids[i] == s || tf.ids[i] == t)
            continue;
        if (hop_add(tf.to_target[i].dist[s], tf.from_target[i].dist[t]) == dst)
            return true;
    }
    return false;
}

} // namespace detail

// True iff (s, t) has a shortest path through some target node. ds must be
// d(s, .), dt must be d(., t) (reverse BFS from t on directed graphs).
// Unreachable pairs are never covered. s and t must lie outside the targets.
inline bool pair_covered(const Graph &g, NodeId s, NodeId t, const std::vector<NodeId> &targets,
                         const DistanceField &ds, const DistanceField &dt) {
    (void)g;
    const Distance dst = ds.dist[t];
    if (dst == kUnreachable)
        return false;
    for (NodeId x : targets) {
        if (x == s || x == t)
            continue;
        if (hop_add(ds.dist[x], dt.dist[x]) == dst)
            return true;
    }
    return false;
}

// Exact group coverage over the universe. Deterministic at any thread count.
inline CoverageState group_coverage(const Graph &g, const std::vector<NodeId> &targets,
                                    const PairUniverse &universe, int threads = 1) {
    CoverageState state;
    state.ordered_pairs = g.directed();
    state.universe = universe.size(g, targets);
    if (state.universe == 0)
        return state;

    const TargetFields tf(g, targets);
    const int workers = resolve_threads(threads);

    std::uint64_t covered = 0;
    if (universe.all_pairs) {
        const auto mask = make_mask(g.node_count(), targets);
        const auto sources = nodes_outside(g.node_count(), mask);
        covered = parallel_reduce<std::uint64_t>(
            sources.size(), workers, 0,
            [&](std::size_t begin, std::size_t end) {
                std::uint64_t local = 0;
                for (std::size_t i = begin; i < end; ++i) {
                    const NodeId s = sources[i];
                    const DistanceField ds = bfs(g, s);
                    if (g.directed()) {
                        for (NodeId t : sources)
                            if (t != s && detail::covered_via_targets(tf, s, t, ds.dist[t]))
                                ++local;
                    } else {
                        for (std::size_t j = i + 1; j < sources.size(); ++j)
                            if (detail::covered_via_targets(tf, s, sources[j], ds.dist[sources[j]]))
                                ++local;
                    }
                }
                return local;
            },
            std::plus<>());
    } else {
        // Group explicit pairs by source so each source is swept once.
        auto sorted = universe.pairs;
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::size_t> group_starts;
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (i == 0 || sorted[i].first != sorted[i - 1].first)
                group_starts.push_back(i);
        covered = parallel_reduce<std::uint64_t>(
            group_starts.size(), workers, 0,
            [&](std::size_t begin, std::size_t end) {
                std::uint64_t local = 0;
                for (std::size_t gi = begin; gi < end; ++gi) {
                    const std::size_t first = group_starts[gi];
                    const std::size_t last = gi + 1 < group_starts.size() ? group_starts[gi + 1] : sorted.size();
                    const DistanceField ds = bfs(g, sorted[first].first);
                    for (std::size_t i = first; i < last; ++i)
                        if (detail::covered_via_targets(tf, sorted[i].first, sorted[i].second,
                                                        ds.dist[sorted[i].second]))
                            ++local;
                }
                return local;
            },
            std::plus<>());
    }

    state.covered = covered;
    state.uncovered = state.universe - covered;
    return state;
}

// Materializes the whole universe in deterministic order. Guarded.
inline std::vector<std::pair<NodeId, NodeId>>
universe_pairs(const Graph &g, const std::vector<NodeId> &targets, const PairUniverse &universe,
               std::uint64_t materialize_threshold = 1'000'000) {
    const std::uint64_t total = universe.size(g, targets);
    if (total > materialize_threshold)
        throw GuardError("pair universe too large to materialize: " + std::to_string(total) + " pairs");
    if (!universe.all_pairs)
        return universe.pairs;
    const auto mask = make_mask(g.node_count(), targets);
    const auto outside = nodes_outside(g.node_count(), mask);
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(total);
    for (std::size_t i = 0; i < outside.size(); ++i) {
        if (g.directed()) {
            for (std::size_t j = 0; j < outside.size(); ++j)
                if (i != j)
                    out.emplace_back(outside[i], outside[j]);
        } else {
            for (std::size_t j = i + 1; j < outside.size(); ++j)
                out.emplace_back(outside[i], outside[j]);
        }
    }
    return out;
}

// Materializes the uncovered pairs, in deterministic (sorted-source) order.
// Guarded: refuses universes beyond the threshold.
inline std::vector<std::pair<NodeId, NodeId>>
enumerate_uncovered(const Graph &g, const std::vector<NodeId> &targets, const PairUniverse &universe,
                    std::uint64_t materialize_threshold = 1'000'000) {
    const std::uint64_t total = universe.size(g, targets);
    if (total > materialize_threshold)
        throw GuardError("pair universe too large to materialize: " + std::to_string(total) + " pairs");

    const TargetFields tf(g, targets);
    std::vector<std::pair<NodeId, NodeId>> out;

    auto sweep = [&](NodeId s, auto &&emit_targets) {
        const DistanceField ds = bfs(g, s);
        emit_targets(s, ds);
    };

    if (universe.all_pairs) {
        const auto mask = make_mask(g.node_count(), targets);
        const auto sources = nodes_outside(g.node_count(), mask);
        for (std::size_t i = 0; i < sources.size(); ++i) {
            sweep(sources[i], [&](NodeId s, const DistanceField &ds) {
                if (g.directed()) {
                    for (NodeId t : sources)
                        if (t != s && !detail::covered_via_targets(tf, s, t, ds.dist[t]))
                            out.emplace_back(s, t);
                } else {
                    for (std::size_t j = i + 1; j < sources.size(); ++j)
                        if (!detail::covered_via_targets(tf, s, sources[j], ds.dist[sources[j]]))
                            out.emplace_back(s, sources[j]);
                }
            });
        }
    } else {
        auto sorted = universe.pairs;
        std::sort(sorted.begin(), sorted.end());
        std::size_t i = 0;
        while (i < sorted.size()) {
            std::size_t j = i;
            while (j < sorted.size() && sorted[j].first == sorted[i].first)
                ++j;
            sweep(sorted[i].first, [&](NodeId, const DistanceField &ds) {
                for (std::size_t p = i; p < j; ++p)
                    if (!detail::covered_via_targets(tf, sorted[p].first, sorted[p].second,
                                                     ds.dist[sorted[p].second]))
                        out.push_back(sorted[p]);
            });
            i = j;
        }
    }
    return out;
}

// One sampled uncovered pair with the distance fields the scorer needs.
struct SampledPair {
    NodeId s = 0;
    NodeId t = 0;
    DistanceField from_s; // d(s, .)
    DistanceField to_t;   // d(., t)
    bool covered = false; // flips true once a committed edge covers the pair
};

enum class UncoveredCountSource { exact, estimated, exhaustive };

inline const char *to_string(UncoveredCountSource s) {
    switch (s) {
    case UncoveredCountSource::exact:
        return "exact";
    case UncoveredCountSource::estimated:
        return "estimated";
    case UncoveredCountSource::exhaustive:
        return "exhaustive";
    }
    return "?";
}

struct SampleSet {
    std::vector<SampledPair> pairs;
    std::uint64_t draws = 0;       // total rejection-sampling draws, accepted included
    double uncovered_count = 0;    // m_u in the universe's convention
    UncoveredCountSource uncovered_source = UncoveredCountSource::estimated;
    bool exhaustive = false;

    std::size_t size() const { return pairs.size(); }
};

struct SampleOptions {
    // Consecutive rejections tolerated per sample slot, as a multiple of n.
    std::size_t rejection_cap_per_node = 10;
    std::uint64_t materialize_threshold = 1'000'000;
    int threads = 1;
};

namespace detail {

inline std::pair<NodeId, NodeId> draw_universe_pair(const Graph &g, const PairUniverse &universe,
                                                    const std::vector<NodeId> &sources, Rng &rng) {
    if (!universe.all_pairs)
        return universe.pairs[rng.below(universe.pairs.size())];
    const std::size_t r = sources.size();
    const std::size_t i = rng.below(r);
    std::size_t j = rng.below(r - 1);
    if (j >= i)
        ++j;
    NodeId s = sources[i];
    NodeId t = sources[j];
    if (!g.directed() && s > t)
        std::swap(s, t);
    return {s, t};
}

inline SampledPair make_sampled_pair(const Graph &g, NodeId s, NodeId t) {
    SampledPair p;
    p.s = s;
    p.t = t;
    p.from_s = bfs(g, s);
    p.to_t = bfs(g, t, /*reversed=*/g.directed());
    return p;
}

} // namespace detail

// Every uncovered pair exactly once, with distance fields. m_u is exact.
inline SampleSet exhaustive_sample(const Graph &g, const std::vector<NodeId> &targets,
                                   const PairUniverse &universe, const SampleOptions &opts = {}) {
    const auto uncovered = enumerate_uncovered(g, targets, universe, opts.materialize_threshold);
    if (uncovered.empty())
        throw ValidationError({"no uncovered pairs: the targets already cover the whole universe"});
    SampleSet set;
    set.exhaustive = true;
    set.uncovered_source = UncoveredCountSource::exhaustive;
    set.uncovered_count = static_cast<double>(uncovered.size());
    set.draws = uncovered.size();
    set.pairs.resize(uncovered.size());
    const int workers = resolve_threads(opts.threads);
    parallel_for(uncovered.size(), workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            set.pairs[i] = detail::make_sampled_pair(g, uncovered[i].first, uncovered[i].second);
    });
    return set;
}

// q pairs drawn uniformly with replacement from the uncovered part of the
// universe, by rejection sampling against the coverage predicate. Each slot
// owns an rng stream split by its index, so the result is identical at any
// worker count. A slot that rejects 10n draws in a row (near-full coverage)
// triggers an exact-enumeration fallback when the universe is small enough,
// and a guard refusal otherwise.
inline SampleSet sample_uncovered_pairs(const Graph &g, const std::vector<NodeId> &targets,
                                        const PairUniverse &universe, std::size_t q, const Rng &rng,
                                        const SampleOptions &opts = {}) {
    if (q == 0)
        throw ValidationError({"sample count must be at least 1"});
    const std::uint64_t universe_size = universe.size(g, targets);
    if (universe_size == 0)
        throw ValidationError({"empty pair universe"});

    const TargetFields tf(g, targets);
    const auto mask = make_mask(g.node_count(), targets);
    const auto sources = nodes_outside(g.node_count(), mask);
    const std::size_t cap = opts.rejection_cap_per_node * std::max<std::size_t>(g.node_count(), 1);
    const int workers = resolve_threads(opts.threads);

    SampleSet set;
    set.pairs.resize(q);
    std::vector<std::uint64_t> slot_draws(q, 0);
    std::vector<char> slot_stalled(q, 0);

    parallel_for(q, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t slot = begin; slot < end; ++slot) {
            Rng slot_rng = rng.split(slot);
            std::size_t streak = 0;
            while (true) {
                const auto [s, t] = detail::draw_universe_pair(g, universe, sources, slot_rng);
                ++slot_draws[slot];
                SampledPair candidate = detail::make_sampled_pair(g, s, t);
                if (pair_covered(g, s, t, targets, candidate.from_s, candidate.to_t)) {
                    if (++streak >= cap) {
                        slot_stalled[slot] = 1;
                        break;
                    }
                    continue;
                }
                set.pairs[slot] = std::move(candidate);
                break;
            }
        }
    });

    for (std::uint64_t d : slot_draws)
        set.draws += d;

    const bool stalled = std::find(slot_stalled.begin(), slot_stalled.end(), 1) != slot_stalled.end();
    if (!stalled) {
        set.uncovered_source = UncoveredCountSource::estimated;
        set.uncovered_count = static_cast<double>(universe_size) * static_cast<double>(q) /
                              static_cast<double>(set.draws);
        return set;
    }

    if (universe_size > opts.materialize_threshold) {
        const double covered_fraction = 1.0 - static_cast<double>(q) / static_cast<double>(set.draws);
        throw GuardError("rejection sampling stalled after " + std::to_string(set.draws) +
                         " draws (estimated covered fraction " + std::to_string(covered_fraction) +
                         ") and the universe is too large to enumerate");
    }

    const auto uncovered = enumerate_uncovered(g, targets, universe, opts.materialize_threshold);
    if (uncovered.empty())
        throw ValidationError({"no uncovered pairs: the targets already cover the whole universe"});
    set.uncovered_source = UncoveredCountSource::exact;
    set.uncovered_count = static_cast<double>(uncovered.size());
    parallel_for(q, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t slot = begin; slot < end; ++slot) {
            Rng slot_rng = rng.split(q + slot);
            const auto &[s, t] = uncovered[slot_rng.below(uncovered.size())];
            set.pairs[slot] = detail::make_sampled_pair(g, s, t);
        }
    });
    return set;
}

} // namespace centrex

#endif // CENTREX_COVERAGE_HPP_
