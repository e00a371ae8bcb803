#ifndef CENTREX_ORACLE_HPP_
#define CENTREX_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "centrex/common.hpp"
#include "centrex/coverage.hpp"
#include "centrex/graph.hpp"
#include "centrex/parallel.hpp"
#include "centrex/problem.hpp"
#include "centrex/rng.hpp"

// Ground-truth checks kept deliberately independent of the coverage module:
// this namespace has its own BFS and decides coverage by marking the
// shortest-path DAG instead of comparing distance sums. If the two routes
// ever disagree, one of them is wrong.
namespace centrex::oracle {

// Independent BFS (do not fold into centrex::bfs; the duplication is the
// point of the oracle).
inline std::vector<Distance> hop_distances(const Graph &g, NodeId source, bool reversed = false) {
    std::vector<Distance> dist(g.node_count(), kUnreachable);
    std::vector<NodeId> queue;
    queue.reserve(g.node_count());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId u = queue[head];
        for (NodeId v : reversed ? g.in_neighbors(u) : g.neighbors(u)) {
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

// Marks every node lying on at least one shortest s-t path, by sweeping the
// BFS layer DAG backwards from t. Empty marks when t is unreachable.
inline std::vector<char> shortest_path_nodes(const Graph &g, NodeId t,
                                             const std::vector<Distance> &dist_s) {
    std::vector<char> marked(g.node_count(), 0);
    const Distance span = dist_s[t];
    if (span == kUnreachable)
        return marked;

    std::vector<std::vector<NodeId>> layers(span + 1);
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (dist_s[v] <= span)
            layers[dist_s[v]].push_back(v);

    marked[t] = 1;
    for (Distance layer = span; layer-- > 0;) {
        for (NodeId v : layers[layer]) {
            for (NodeId w : g.neighbors(v)) {
                if (dist_s[w] == layer + 1 && marked[w]) {
                    marked[v] = 1;
                    break;
                }
            }
        }
    }
    return marked;
}

inline bool dag_pair_covered(const Graph &g, NodeId s, NodeId t, const std::vector<char> &target_mask,
                             const std::vector<Distance> &dist_s) {
    const auto marked = shortest_path_nodes(g, t, dist_s);
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (marked[v] && target_mask[v] && v != s && v != t)
            return true;
    return false;
}

// Group coverage by explicit shortest-path-DAG inspection. Must agree with
// group_coverage exactly; guarded to desk scale.
inline std::uint64_t dag_coverage(const Graph &g, const std::vector<NodeId> &targets,
                                  const PairUniverse &universe, NodeId node_guard = 200) {
    if (g.node_count() > node_guard)
        throw GuardError("dag coverage is guarded to " + std::to_string(node_guard) + " nodes");
    const auto mask = make_mask(g.node_count(), targets);

    std::uint64_t covered = 0;
    if (universe.all_pairs) {
        const auto outside = nodes_outside(g.node_count(), mask);
        for (std::size_t i = 0; i < outside.size(); ++i) {
            const auto dist_s = hop_distances(g, outside[i]);
            if (g.directed()) {
                for (std::size_t j = 0; j < outside.size(); ++j)
                    if (i != j && dag_pair_covered(g, outside[i], outside[j], mask, dist_s))
                        ++covered;
            } else {
                for (std::size_t j = i + 1; j < outside.size(); ++j)
                    if (dag_pair_covered(g, outside[i], outside[j], mask, dist_s))
                        ++covered;
            }
        }
    } else {
        for (const auto &[s, t] : universe.pairs) {
            const auto dist_s = hop_distances(g, s);
            if (dag_pair_covered(g, s, t, mask, dist_s))
                ++covered;
        }
    }
    return covered;
}

namespace detail {

inline std::vector<Edge> subset_edges(const ProblemInstance &p, const std::vector<std::size_t> &subset) {
    std::vector<Edge> edges;
    edges.reserve(subset.size());
    for (std::size_t i : subset)
        edges.push_back(p.candidates[i]);
    return edges;
}

// All index subsets of size 1..max_size, in lexicographic order.
inline std::vector<std::vector<std::size_t>> enumerate_subsets(std::size_t universe, std::size_t max_size,
                                                               std::uint64_t guard) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    auto recurse = [&](auto &&self, std::size_t next) -> void {
        if (!current.empty())
            out.push_back(current);
        if (current.size() == max_size)
            return;
        for (std::size_t i = next; i < universe; ++i) {
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
            if (out.size() > guard)
                throw GuardError("subset enumeration exceeds guard of " + std::to_string(guard));
        }
    };
    recurse(recurse, 0);
    std::stable_sort(out.begin(), out.end(),
                     [](const auto &a, const auto &b) { return a.size() < b.size(); });
    return out;
}

} // namespace detail

struct BruteForceResult {
    std::vector<std::size_t> best_subset; // empty when nothing improves
    std::int64_t best_gain = 0;
    std::uint64_t base_coverage = 0;
    std::uint64_t subsets_evaluated = 0;
};

// Exhaustive optimum over all candidate subsets of size <= budget, evaluated
// through the DAG route. Argmax ties resolve to the lexicographically first
// subset (shorter first). Guarded by total subset count.
inline BruteForceResult brute_force_opt(const ProblemInstance &p, std::uint64_t subset_guard = 1'000'000,
                                        int threads = 1) {
    validate_or_throw(p);
    const auto subsets =
        detail::enumerate_subsets(p.candidates.size(), static_cast<std::size_t>(p.budget), subset_guard);

    BruteForceResult result;
    result.base_coverage = dag_coverage(p.graph, p.targets, p.universe);
    result.subsets_evaluated = subsets.size() + 1;

    struct Best {
        std::int64_t gain = 0;
        std::size_t rank = std::numeric_limits<std::size_t>::max(); // empty subset sentinel
    };
    const int workers = resolve_threads(threads);
    const Best best = parallel_reduce<Best>(
        subsets.size(), workers, Best{},
        [&](std::size_t begin, std::size_t end) {
            Best local{};
            for (std::size_t i = begin; i < end; ++i) {
                const Graph modified = p.graph.with_edges(detail::subset_edges(p, subsets[i]));
                const std::int64_t gain =
                    static_cast<std::int64_t>(dag_coverage(modified, p.targets, p.universe)) -
                    static_cast<std::int64_t>(result.base_coverage);
                if (gain > local.gain || (gain == local.gain && i < local.rank))
                    local = {gain, i};
            }
            return local;
        },
        [](Best a, Best b) {
            if (b.gain > a.gain || (b.gain == a.gain && b.rank < a.rank))
                return b;
            return a;
        });

    result.best_gain = best.gain;
    if (best.rank != std::numeric_limits<std::size_t>::max() && best.gain > 0)
        result.best_subset = subsets[best.rank];
    return result;
}

namespace detail {

// Does some shortest s-t path in g_mod pass through a target *and* use at
// least two of the added edges? Dynamic program over the shortest-path DAG
// with states (node, target seen, added edges used capped at 2).
inline bool two_added_edges_on_target_path(const Graph &g_mod, NodeId s, NodeId t,
                                           const std::vector<char> &target_mask,
                                           const std::vector<Edge> &added) {
    const auto dist_s = hop_distances(g_mod, s);
    if (dist_s[t] == kUnreachable)
        return false;
    const auto dist_to_t = hop_distances(g_mod, t, /*reversed=*/g_mod.directed());
    const Distance span = dist_s[t];

    auto on_dag = [&](NodeId v) { return hop_add(dist_s[v], dist_to_t[v]) == span; };
    auto is_added = [&](NodeId u, NodeId v) {
        for (const Edge &e : added) {
            if (g_mod.directed()) {
                if (e.u == u && e.v == v)
                    return true;
            } else if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
                return true;
            }
        }
        return false;
    };

    std::vector<std::vector<NodeId>> layers(span + 1);
    for (NodeId v = 0; v < g_mod.node_count(); ++v)
        if (dist_s[v] <= span && on_dag(v))
            layers[dist_s[v]].push_back(v);

    const NodeId n = g_mod.node_count();
    // reach[v][seen][used] with used capped at 2
    std::vector<char> reach(std::size_t(n) * 2 * 3, 0);
    auto cell = [&](NodeId v, int seen, int used) -> char & {
        return reach[(std::size_t(v) * 2 + seen) * 3 + used];
    };
    cell(s, 0, 0) = 1;

    for (Distance layer = 0; layer < span; ++layer) {
        for (NodeId u : layers[layer]) {
            for (int seen = 0; seen < 2; ++seen)
                for (int used = 0; used < 3; ++used) {
                    if (!cell(u, seen, used))
                        continue;
                    for (NodeId w : g_mod.neighbors(u)) {
                        if (dist_s[w] != layer + 1 || !on_dag(w))
                            continue;
                        const int seen2 = seen | (target_mask[w] && w != t ? 1 : 0);
                        const int used2 = std::min(2, used + (is_added(u, w) ? 1 : 0));
                        cell(w, seen2, used2) = 1;
                    }
                }
        }
    }
    return cell(t, 1, 2) != 0;
}

} // namespace detail

// Certifies that every pair newly covered by the given candidate subset owes
// its coverage to exactly one of the added edges: one single edge covers it
// alone, and no shortest path witnessing the coverage uses two added edges.
inline bool certify_unique_edge_coverage(const ProblemInstance &p, const std::vector<std::size_t> &subset,
                                         NodeId node_guard = 64) {
    if (p.graph.node_count() > node_guard)
        throw GuardError("certification is guarded to " + std::to_string(node_guard) + " nodes");
    if (subset.empty())
        return true;
    const auto mask = p.target_mask();
    const auto added = detail::subset_edges(p, subset);
    const Graph modified = p.graph.with_edges(added);

    std::vector<Graph> singles;
    singles.reserve(subset.size());
    for (std::size_t i : subset)
        singles.push_back(p.graph.with_edge(p.candidates[i]));

    const auto pairs = universe_pairs(p.graph, p.targets, p.universe);

    for (const auto &[s, t] : pairs) {
        const auto dist_mod = hop_distances(modified, s);
        if (!dag_pair_covered(modified, s, t, mask, dist_mod))
            continue;
        const auto dist_base = hop_distances(p.graph, s);
        if (dag_pair_covered(p.graph, s, t, mask, dist_base))
            continue; // covered before, not this subset's doing

        std::size_t responsible = 0;
        for (const Graph &single : singles) {
            const auto dist_single = hop_distances(single, s);
            if (dag_pair_covered(single, s, t, mask, dist_single))
                ++responsible;
        }
        if (responsible != 1)
            return false;
        if (detail::two_added_edges_on_target_path(modified, s, t, mask, added))
            return false;
    }
    return true;
}

// Instance-level certificate: the unique-edge-coverage property holds for
// every subset of the candidate set (any size). This is the hypothesis under
// which the greedy objective is monotone and submodular.
inline bool certify_instance(const ProblemInstance &p, NodeId node_guard = 64,
                             std::size_t candidate_guard = 20) {
    if (p.candidates.size() > candidate_guard)
        throw GuardError("instance certification is guarded to " + std::to_string(candidate_guard) +
                         " candidates");
    const auto subsets = detail::enumerate_subsets(p.candidates.size(), p.candidates.size(),
                                                   std::uint64_t(1) << 22);
    for (const auto &subset : subsets)
        if (!certify_unique_edge_coverage(p, subset, node_guard))
            return false;
    return true;
}

struct Witness {
    ProblemInstance instance;
    std::vector<std::size_t> base;  // smaller edge set
    std::vector<std::size_t> super; // strict superset of base
    std::size_t extra = 0;          // the edge whose gain grows
    std::int64_t base_gain_delta = 0;
    std::int64_t super_gain_delta = 0;
};

// Randomized search for a violation of diminishing returns:
//   f(base + extra) - f(base) < f(super + extra) - f(super)
// over small random instances of the given setting. With require_certified
// set, only instances passing the unique-edge-coverage certificate count;
// for target-incident settings none should ever be found.
inline std::optional<Witness> find_non_submodular_witness(Setting setting, Rng &rng,
                                                          std::uint64_t max_tries = 100'000,
                                                          bool require_certified = false) {
    const bool directed = directed_setting(setting);

    for (std::uint64_t attempt = 0; attempt < max_tries; ++attempt) {
        Rng r = rng.split(attempt);
        const NodeId n = static_cast<NodeId>(4 + r.below(5)); // 4..8 nodes
        const double density = 0.15 + 0.35 * r.next_double();

        std::vector<Edge> edges;
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = directed ? 0 : u + 1; v < n; ++v)
                if (u != v && r.chance(density))
                    edges.push_back({u, v});
        const Graph g(n, directed, edges);

        ProblemInstance p;
        p.graph = g;
        p.setting = setting;
        p.targets = {static_cast<NodeId>(r.below(n))};
        if (r.chance(0.2) && n > 2) {
            NodeId second = static_cast<NodeId>(r.below(n));
            if (second != p.targets[0])
                p.targets.push_back(second);
            std::sort(p.targets.begin(), p.targets.end());
        }

        std::vector<Edge> candidates;
        try {
            candidates = build_candidates(g, p.targets, setting);
        } catch (const ValidationError &) {
            continue;
        }
        while (candidates.size() > 6)
            candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(r.below(candidates.size())));
        if (candidates.size() < 2)
            continue;
        p.candidates = candidates;

        // Violations are easiest to hit with a single-edge super set and an
        // empty base, so bias the draw that way.
        const std::size_t extra = r.below(candidates.size());
        std::vector<std::size_t> super;
        const std::size_t super_size = 1 + (r.chance(0.3) ? 1 : 0);
        while (super.size() < super_size && super.size() + 1 < candidates.size()) {
            const std::size_t pick = r.below(candidates.size());
            if (pick != extra && std::find(super.begin(), super.end(), pick) == super.end())
                super.push_back(pick);
        }
        if (super.empty())
            continue;
        std::sort(super.begin(), super.end());
        std::vector<std::size_t> base;
        for (std::size_t i : super)
            if (r.chance(0.3))
                base.push_back(i);
        if (base.size() == super.size())
            base.clear();

        p.budget = static_cast<int>(std::min(candidates.size(), super.size() + 1));
        if (!validate(p).empty())
            continue;

        const auto gain_of = [&](std::vector<std::size_t> subset) {
            const std::uint64_t before = dag_coverage(p.graph, p.targets, p.universe);
            const Graph modified = p.graph.with_edges(detail::subset_edges(p, subset));
            return static_cast<std::int64_t>(dag_coverage(modified, p.targets, p.universe)) -
                   static_cast<std::int64_t>(before);
        };

        auto with_extra = [&](std::vector<std::size_t> subset) {
            subset.push_back(extra);
            std::sort(subset.begin(), subset.end());
            return subset;
        };

        const std::int64_t base_delta = gain_of(with_extra(base)) - gain_of(base);
        const std::int64_t super_delta = gain_of(with_extra(super)) - gain_of(super);
        if (base_delta >= super_delta)
            continue;
        if (require_certified && !certify_instance(p))
            continue;

        Witness w;
        w.instance = std::move(p);
        w.base = std::move(base);
        w.super = std::move(super);
        w.extra = extra;
        w.base_gain_delta = base_delta;
        w.super_gain_delta = super_delta;
        return w;
    }
    return std::nullopt;
}

} // namespace centrex::oracle

#endif // CENTREX_ORACLE_HPP_
