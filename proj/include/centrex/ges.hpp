#ifndef CENTREX_GES_HPP_
#define CENTREX_GES_HPP_

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "centrex/coverage.hpp"
#include "centrex/graph.hpp"
#include "centrex/parallel.hpp"
#include "centrex/problem.hpp"

namespace centrex {

namespace detail {

// Distances in g + {(a, b)}: a single extra edge either leaves d(s, t) alone
// or routes through the new edge exactly once, so the cached matrix gives the
// new value in O(1).
inline Distance dist_with_edge(const DistanceMatrix &d, bool directed, NodeId a, NodeId b, NodeId s,
                               NodeId t) {
    Distance best = d.at(s, t);
    best = std::min(best, hop_add(d.at(s, a), 1, d.at(b, t)));
    if (!directed)
        best = std::min(best, hop_add(d.at(s, b), 1, d.at(a, t)));
    return best;
}

inline bool covered_with_edge(const DistanceMatrix &d, bool directed, const std::vector<NodeId> &targets,
                              NodeId a, NodeId b, NodeId s, NodeId t) {
    const Distance dst = dist_with_edge(d, directed, a, b, s, t);
    if (dst == kUnreachable)
        return false;
    for (NodeId x : targets) {
        const Distance via = hop_add(dist_with_edge(d, directed, a, b, s, x),
                                     dist_with_edge(d, directed, a, b, x, t));
        if (via == dst)
            return true;
    }
    return false;
}

inline bool covered_in_matrix(const DistanceMatrix &d, const std::vector<NodeId> &targets, NodeId s,
                              NodeId t) {
    const Distance dst = d.at(s, t);
    if (dst == kUnreachable)
        return false;
    for (NodeId x : targets)
        if (hop_add(d.at(s, x), d.at(x, t)) == dst)
            return true;
    return false;
}

// Coverage change from adding one candidate, evaluated pair by pair against
// the cached matrix. Negative values are possible when the candidate is not
// target-incident (a shortcut can strip a pair of its covered shortest path).
inline std::int64_t coverage_delta(const DistanceMatrix &d, bool directed,
                                   const std::vector<NodeId> &targets,
                                   const std::vector<std::pair<NodeId, NodeId>> &pairs,
                                   const std::vector<char> &base_covered, Edge e) {
    std::int64_t delta = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const bool now = covered_with_edge(d, directed, targets, e.u, e.v, pairs[i].first, pairs[i].second);
        delta += static_cast<std::int64_t>(now) - static_cast<std::int64_t>(base_covered[i]);
    }
    return delta;
}

} // namespace detail

// Exact marginal gain of one absent edge: coverage in g + {e} minus the given
// base. Definitional form; the greedy loop uses the matrix-cached equivalent.
inline std::int64_t marginal_gain_exact(const Graph &g, const std::vector<NodeId> &targets,
                                        const PairUniverse &universe, std::uint64_t base_coverage,
                                        Edge e, int threads = 1) {
    const CoverageState after = group_coverage(g.with_edge(e), targets, universe, threads);
    return static_cast<std::int64_t>(after.covered) - static_cast<std::int64_t>(base_coverage);
}

struct GesOptions {
    bool stop_on_zero_gain = false;
    int threads = 1;
};

// Greedy edge selection with exact marginal evaluation. Each of the budget
// iterations recomputes all-pairs distances on the current graph, scores
// every remaining candidate exactly, and commits the argmax (ties broken by
// the lowest candidate index). Gains recorded are exact.
inline SelectionReport run_ges(const ProblemInstance &p, const GesOptions &opts = {}) {
    validate_or_throw(p);
    const int workers = resolve_threads(opts.threads);

    SelectionReport report;
    report.algorithm = "ges";
    report.coverage_before = group_coverage(p.graph, p.targets, p.universe, workers);

    const auto pairs = universe_pairs(p.graph, p.targets, p.universe,
                                      std::numeric_limits<std::uint64_t>::max());
    Graph current = p.graph;
    std::vector<char> taken(p.candidates.size(), 0);

    for (int round = 1; round <= p.budget; ++round) {
        const DistanceMatrix dist(current);
        std::vector<char> base_covered(pairs.size(), 0);
        parallel_for(pairs.size(), workers, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i)
                base_covered[i] =
                    detail::covered_in_matrix(dist, p.targets, pairs[i].first, pairs[i].second);
        });

        struct Best {
            std::int64_t gain;
            std::size_t index;
        };
        constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min();
        const Best best = parallel_reduce<Best>(
            p.candidates.size(), workers, Best{kNone, 0},
            [&](std::size_t begin, std::size_t end) {
                Best local{kNone, 0};
                for (std::size_t i = begin; i < end; ++i) {
                    if (taken[i])
                        continue;
                    const std::int64_t gain = detail::coverage_delta(dist, current.directed(), p.targets,
                                                                     pairs, base_covered, p.candidates[i]);
                    if (gain > local.gain || (gain == local.gain && i < local.index))
                        local = {gain, i};
                }
                return local;
            },
            [](Best a, Best b) {
                if (b.gain > a.gain || (b.gain == a.gain && b.gain != kNone && b.index < a.index))
                    return b;
                return a;
            });

        if (best.gain == kNone)
            break; // no candidates left
        if (opts.stop_on_zero_gain && best.gain <= 0) {
            report.warnings.push_back("stopped after " + std::to_string(round - 1) +
                                      " picks: best remaining gain " + std::to_string(best.gain));
            break;
        }

        const Edge chosen = p.candidates[best.index];
        taken[best.index] = 1;
        current = current.with_edge(chosen);
        report.selected_indices.push_back(best.index);
        report.selected_edges.push_back(chosen);
        report.iterations.push_back({round, best.index, chosen, best.gain, /*sampled=*/false,
                                     /*scaled_gain=*/static_cast<double>(best.gain),
                                     /*heuristic=*/false});
    }

    report.coverage_after = group_coverage(current, p.targets, p.universe, workers);
    return report;
}

} // namespace centrex

#endif // CENTREX_GES_HPP_
