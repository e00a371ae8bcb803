#ifndef CENTREX_BASELINES_HPP_
#define CENTREX_BASELINES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "centrex/coverage.hpp"
#include "centrex/graph.hpp"
#include "centrex/parallel.hpp"
#include "centrex/problem.hpp"
#include "centrex/rng.hpp"

namespace centrex {

namespace detail {

inline std::unordered_map<std::uint64_t, std::size_t> candidate_lookup(const ProblemInstance &p) {
    std::unordered_map<std::uint64_t, std::size_t> out;
    out.reserve(p.candidates.size());
    for (std::size_t i = 0; i < p.candidates.size(); ++i) {
        const Edge e = p.candidates[i];
        out.emplace(edge_key(e.u, e.v, p.graph.directed()), i);
    }
    return out;
}

// Pairs the given non-target nodes with targets, round-robin over the sorted
// target set. Only edges present in the candidate set are feasible (they are
// absent from the graph by instance invariant); for a node with no feasible
// pairing the node is skipped. The round-robin pointer advances past the
// target actually used, which keeps the load balanced across targets.
inline void pair_nodes_with_targets(const ProblemInstance &p, const std::vector<NodeId> &nodes,
                                    SelectionReport &report) {
    const auto lookup = candidate_lookup(p);
    std::vector<char> taken(p.candidates.size(), 0);
    std::size_t rr = 0;
    int round = 0;

    for (NodeId v : nodes) {
        if (report.selected_edges.size() >= static_cast<std::size_t>(p.budget))
            break;
        bool paired = false;
        for (std::size_t off = 0; off < p.targets.size() && !paired; ++off) {
            const NodeId x = p.targets[(rr + off) % p.targets.size()];
            // Directed instances admit either orientation; take the one that
            // is an actual candidate, outward first.
            for (const Edge e : {Edge{x, v}, Edge{v, x}}) {
                const auto it = lookup.find(edge_key(e.u, e.v, p.graph.directed()));
                if (it == lookup.end() || taken[it->second])
                    continue;
                taken[it->second] = 1;
                report.selected_indices.push_back(it->second);
                report.selected_edges.push_back(p.candidates[it->second]);
                report.iterations.push_back({++round, it->second, p.candidates[it->second], 0,
                                             /*sampled=*/false, 0.0, /*heuristic=*/true});
                rr = (rr + off + 1) % p.targets.size();
                paired = true;
                break;
            }
        }
    }
    if (report.selected_edges.size() < static_cast<std::size_t>(p.budget))
        report.warnings.push_back("only " + std::to_string(report.selected_edges.size()) + " of " +
                                  std::to_string(p.budget) + " requested edges were feasible");
}

inline void require_target_incident(const ProblemInstance &p, const char *algorithm) {
    if (!target_incident_setting(p.setting))
        throw ValidationError({std::string(algorithm) + " is defined for target-incident settings only"});
}

} // namespace detail

// Connects the targets to the highest-degree outside nodes. Ties go to the
// lower node id. Gains are not evaluated during selection; the report's
// coverage is recomputed exactly at the end.
inline SelectionReport high_degree(const ProblemInstance &p, std::uint64_t seed = 0, int threads = 1) {
    validate_or_throw(p);
    detail::require_target_incident(p, "high-degree");
    const int workers = resolve_threads(threads);

    SelectionReport report;
    report.algorithm = "high-degree";
    report.seed = seed;
    report.coverage_before = group_coverage(p.graph, p.targets, p.universe, workers);

    const auto mask = p.target_mask();
    const auto degree = p.graph.degrees();
    std::vector<NodeId> ranked = nodes_outside(p.graph.node_count(), mask);
    std::stable_sort(ranked.begin(), ranked.end(),
                     [&](NodeId a, NodeId b) { return degree[a] != degree[b] ? degree[a] > degree[b] : a < b; });

    detail::pair_nodes_with_targets(p, ranked, report);
    const Graph modified = p.graph.with_edges(report.selected_edges);
    report.coverage_after = group_coverage(modified, p.targets, p.universe, workers);
    return report;
}

// Adaptive sampled node cover: greedily picks the outside nodes covering the
// most sampled pairs not yet covered by the targets or by earlier picks,
// then connects them to the targets. sample_count 0 means every universe
// pair exactly once (guarded). This approximates the adaptive
// centrality-cover selection the comparison calls for, sampled the same way
// the main optimizer is.
inline SelectionReport high_acc(const ProblemInstance &p, std::size_t sample_count, std::uint64_t seed,
                                int threads = 1) {
    validate_or_throw(p);
    detail::require_target_incident(p, "high-acc");
    const int workers = resolve_threads(threads);
    const bool directed = p.graph.directed();

    SelectionReport report;
    report.algorithm = "high-acc";
    report.seed = seed;
    report.coverage_before = group_coverage(p.graph, p.targets, p.universe, workers);

    // Sample from the whole universe, covered pairs included.
    std::vector<std::pair<NodeId, NodeId>> sampled;
    if (sample_count == 0) {
        sampled = universe_pairs(p.graph, p.targets, p.universe);
    } else {
        const auto mask0 = p.target_mask();
        const auto outside = nodes_outside(p.graph.node_count(), mask0);
        sampled.resize(sample_count);
        const Rng root(seed);
        parallel_for(sample_count, workers, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                Rng r = root.split(i);
                sampled[i] = detail::draw_universe_pair(p.graph, p.universe, outside, r);
            }
        });
    }
    report.sample_count = sampled.size();

    struct PairFields {
        DistanceField from_s;
        DistanceField to_t;
        bool covered = false;
    };
    std::vector<PairFields> fields(sampled.size());
    parallel_for(sampled.size(), workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            fields[i].from_s = bfs(p.graph, sampled[i].first);
            fields[i].to_t = bfs(p.graph, sampled[i].second, /*reversed=*/directed);
            fields[i].covered = pair_covered(p.graph, sampled[i].first, sampled[i].second, p.targets,
                                             fields[i].from_s, fields[i].to_t);
        }
    });

    auto node_covers = [&](NodeId v, std::size_t i) {
        const auto [s, t] = sampled[i];
        if (v == s || v == t)
            return false;
        const Distance dst = fields[i].from_s.dist[t];
        return dst != kUnreachable && hop_add(fields[i].from_s.dist[v], fields[i].to_t.dist[v]) == dst;
    };

    const auto mask = p.target_mask();
    const auto outside = nodes_outside(p.graph.node_count(), mask);
    std::vector<char> picked_mask(p.graph.node_count(), 0);
    std::vector<NodeId> picked;

    for (int round = 0; round < p.budget && picked.size() < outside.size(); ++round) {
        // Pair-major scoring keeps each pair's distance arrays hot while
        // every node is probed against them.
        std::vector<std::int64_t> gains(outside.size(), 0);
        parallel_for(outside.size(), workers, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = 0; i < sampled.size(); ++i) {
                if (fields[i].covered)
                    continue;
                const auto [s, t] = sampled[i];
                const Distance *from_s = fields[i].from_s.dist.data();
                const Distance *to_t = fields[i].to_t.dist.data();
                const Distance dst = from_s[t];
                if (dst == kUnreachable)
                    continue;
                for (std::size_t vi = begin; vi < end; ++vi) {
                    const NodeId v = outside[vi];
                    if (v != s && v != t && hop_add(from_s[v], to_t[v]) == dst)
                        ++gains[vi];
                }
            }
        });

        std::int64_t best_gain = -1;
        NodeId best_node = 0;
        for (std::size_t vi = 0; vi < outside.size(); ++vi)
            if (!picked_mask[outside[vi]] && gains[vi] > best_gain) {
                best_gain = gains[vi];
                best_node = outside[vi];
            }
        if (best_gain < 0)
            break;
        picked_mask[best_node] = 1;
        picked.push_back(best_node);
        for (std::size_t i = 0; i < sampled.size(); ++i)
            if (!fields[i].covered && node_covers(best_node, i))
                fields[i].covered = true;
    }

    detail::pair_nodes_with_targets(p, picked, report);
    const Graph modified = p.graph.with_edges(report.selected_edges);
    report.coverage_after = group_coverage(modified, p.targets, p.universe, workers);
    return report;
}

// k distinct candidates drawn uniformly without replacement.
inline SelectionReport random_edges(const ProblemInstance &p, std::uint64_t seed, int threads = 1) {
    validate_or_throw(p);
    const int workers = resolve_threads(threads);

    SelectionReport report;
    report.algorithm = "random";
    report.seed = seed;
    report.coverage_before = group_coverage(p.graph, p.targets, p.universe, workers);

    std::vector<std::size_t> indices(p.candidates.size());
    std::iota(indices.begin(), indices.end(), 0);
    Rng rng(seed);
    rng.shuffle(indices);
    indices.resize(static_cast<std::size_t>(p.budget));

    int round = 0;
    for (std::size_t i : indices) {
        report.selected_indices.push_back(i);
        report.selected_edges.push_back(p.candidates[i]);
        report.iterations.push_back({++round, i, p.candidates[i], 0, /*sampled=*/false, 0.0,
                                     /*heuristic=*/true});
    }

    const Graph modified = p.graph.with_edges(report.selected_edges);
    report.coverage_after = group_coverage(modified, p.targets, p.universe, workers);
    return report;
}

} // namespace centrex

#endif // CENTREX_BASELINES_HPP_
