#ifndef CENTREX_BUS_HPP_
#define CENTREX_BUS_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "centrex/coverage.hpp"
#include "centrex/graph.hpp"
#include "centrex/parallel.hpp"
#include "centrex/problem.hpp"
#include "centrex/rng.hpp"

namespace centrex {

// How the sample size was chosen. Log base is natural throughout and is
// recorded in every report.
struct SamplePlan {
    enum class Formula { opt_bound, budget_only, manual, exhaustive };

    Formula formula = Formula::manual;
    std::size_t sample_count = 0; // q; resolved at run time for exhaustive plans
    double epsilon = 0.0;
    int confidence_l = 1;
    std::optional<double> opt_bound;

    static SamplePlan manual(std::size_t q) {
        SamplePlan plan;
        plan.formula = Formula::manual;
        plan.sample_count = q;
        return plan;
    }

    static SamplePlan exhaustive() {
        SamplePlan plan;
        plan.formula = Formula::exhaustive;
        return plan;
    }
};

inline const char *to_string(SamplePlan::Formula f) {
    switch (f) {
    case SamplePlan::Formula::opt_bound:
        return "opt-bound";
    case SamplePlan::Formula::budget_only:
        return "budget-only";
    case SamplePlan::Formula::manual:
        return "manual";
    case SamplePlan::Formula::exhaustive:
        return "exhaustive";
    }
    return "?";
}

namespace detail {

inline void check_sample_size_args(int confidence_l, int budget, std::size_t candidate_count,
                                   double epsilon) {
    std::vector<std::string> issues;
    if (candidate_count < 2)
        issues.push_back("sample-size bound needs at least 2 candidates (log factor vanishes)");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        issues.push_back("epsilon must lie in (0, 1)");
    if (confidence_l < 1)
        issues.push_back("confidence exponent must be a positive integer");
    if (budget < 1)
        issues.push_back("budget must be at least 1");
    if (!issues.empty())
        throw ValidationError(std::move(issues));
}

} // namespace detail

// Sample size that makes every per-iteration estimate epsilon*OPT-accurate
// with probability 1 - 2/|candidates|^l, given a lower bound on the optimum:
// ceil(12 * m_u * (l + k) * ln|candidates| / (epsilon^2 * opt_bound)).
// m_u is the ordered-pair uncovered count; a smaller opt_bound only enlarges
// q, so an underestimate keeps the guarantee.
inline std::size_t sample_size_opt_bound(double uncovered_ordered, int confidence_l, int budget,
                                         std::size_t candidate_count, double epsilon, double opt_bound) {
    detail::check_sample_size_args(confidence_l, budget, candidate_count, epsilon);
    if (!(opt_bound > 0.0) || opt_bound > uncovered_ordered)
        throw ValidationError({"opt bound must lie in (0, uncovered-pair count]"});
    const double q = 12.0 * uncovered_ordered * (confidence_l + budget) *
                     std::log(static_cast<double>(candidate_count)) / (epsilon * epsilon * opt_bound);
    return static_cast<std::size_t>(std::ceil(q));
}

// Bound-free variant trading accuracy target epsilon*OPT for epsilon*m_u:
// ceil(12 * (l + k) * ln|candidates| / epsilon^2).
inline std::size_t sample_size_budget_only(int confidence_l, int budget, std::size_t candidate_count,
                                           double epsilon) {
    detail::check_sample_size_args(confidence_l, budget, candidate_count, epsilon);
    const double q = 12.0 * (confidence_l + budget) * std::log(static_cast<double>(candidate_count)) /
                     (epsilon * epsilon);
    return static_cast<std::size_t>(std::ceil(q));
}

// 256 samples per budget unit. Matches published runs on a small
// co-authorship graph; descriptive only, carries no accuracy guarantee.
inline std::size_t sample_size_preset_256xk(int budget) {
    return static_cast<std::size_t>(256) * static_cast<std::size_t>(budget);
}

// Unbiased coverage estimate from a sample: (m_u / q) * covered-flag count.
// uncovered_count must be in the same pair convention the sample was drawn
// in.
inline double estimate_coverage(const SampleSet &sample, double uncovered_count) {
    if (sample.pairs.empty())
        throw ValidationError({"cannot estimate coverage from an empty sample"});
    std::size_t flagged = 0;
    for (const SampledPair &p : sample.pairs)
        flagged += p.covered ? 1 : 0;
    return uncovered_count * static_cast<double>(flagged) / static_cast<double>(sample.pairs.size());
}

namespace detail {

// Length of the best s-t route through the candidate edge, from the stored
// fields; kUnreachable when the edge connects nothing for this pair.
inline Distance route_via_edge(const SampledPair &pair, Edge e, bool directed) {
    Distance best = hop_add(pair.from_s.dist[e.u], 1, pair.to_t.dist[e.v]);
    if (!directed)
        best = std::min(best, hop_add(pair.from_s.dist[e.v], 1, pair.to_t.dist[e.u]));
    return best;
}

inline bool newly_covers(const SampledPair &pair, Edge e, bool directed) {
    const Distance via = route_via_edge(pair, e, directed);
    return via != kUnreachable && via <= pair.from_s.dist[pair.t];
}

} // namespace detail

// Number of still-uncovered sampled pairs the candidate would cover. A route
// of length <= d(s, t) through a target-incident edge necessarily passes the
// target endpoint, so the tie case counts as covered. Candidates with no
// endpoint in the target set cannot be certified from two stored fields and
// score 0; the caller marks such picks heuristic.
inline std::int64_t score_candidate(const SampleSet &sample, Edge e, const std::vector<char> &target_mask,
                                    bool directed) {
    if (!target_mask[e.u] && !target_mask[e.v])
        return 0;
    std::int64_t score = 0;
    for (const SampledPair &pair : sample.pairs)
        if (!pair.covered && detail::newly_covers(pair, e, directed))
            ++score;
    return score;
}

struct BusOptions {
    int threads = 1;
    SampleOptions sampling;
};

// Greedy selection where marginal gains are estimated on a fixed sample of
// uncovered pairs. The sample is drawn once; every budget iteration
// recomputes the distance fields of still-uncovered sampled pairs on the
// current graph, scores all remaining candidates, commits the argmax (lowest
// candidate index on ties) and flips the covered flags the committed edge
// settles. Reported coverage is recomputed exactly at the end.
inline SelectionReport run_bus(const ProblemInstance &p, const SamplePlan &plan, std::uint64_t seed,
                               const BusOptions &opts = {}) {
    validate_or_throw(p);
    const int workers = resolve_threads(opts.threads);
    const bool directed = p.graph.directed();
    const auto mask = p.target_mask();

    SelectionReport report;
    report.algorithm = "bus";
    report.seed = seed;
    report.coverage_before = group_coverage(p.graph, p.targets, p.universe, workers);

    SampleOptions sampling = opts.sampling;
    sampling.threads = workers;

    SampleSet sample;
    std::size_t q = plan.sample_count;
    if (plan.formula == SamplePlan::Formula::exhaustive) {
        sample = exhaustive_sample(p.graph, p.targets, p.universe, sampling);
        if (q != 0 && q != sample.size())
            report.warnings.push_back("requested sample count " + std::to_string(q) + " clamped to " +
                                      std::to_string(sample.size()) + " (all uncovered pairs)");
        q = sample.size();
    } else {
        if (q == 0)
            throw ValidationError({"sample plan resolves to zero samples"});
        sample = sample_uncovered_pairs(p.graph, p.targets, p.universe, q, Rng(seed), sampling);
    }

    report.sample_count = q;
    report.sample_draws = sample.draws;
    report.uncovered_count_used = sample.uncovered_count;
    report.uncovered_count_source = to_string(sample.uncovered_source);

    Graph current = p.graph;
    std::vector<char> taken(p.candidates.size(), 0);

    for (int round = 1; round <= p.budget; ++round) {
        if (round > 1) {
            // Fields must describe the current graph (they fed on the state
            // before the last commit). Only still-uncovered pairs matter.
            parallel_for(sample.pairs.size(), workers, [&](std::size_t begin, std::size_t end) {
                for (std::size_t i = begin; i < end; ++i) {
                    SampledPair &pair = sample.pairs[i];
                    if (pair.covered)
                        continue;
                    pair.from_s = bfs(current, pair.s);
                    pair.to_t = bfs(current, pair.t, /*reversed=*/directed);
                    // Settle coverage drift from commits the cheap flag test
                    // could not certify (non-target-incident edges).
                    if (pair_covered(current, pair.s, pair.t, p.targets, pair.from_s, pair.to_t))
                        pair.covered = true;
                }
            });
        }

        // Pair-major scoring: each sampled pair's two distance arrays stay
        // hot while every remaining candidate is probed against them.
        std::vector<std::int64_t> scores(p.candidates.size(), 0);
        std::vector<char> scoreable(p.candidates.size(), 0);
        for (std::size_t i = 0; i < p.candidates.size(); ++i)
            scoreable[i] = !taken[i] && (mask[p.candidates[i].u] || mask[p.candidates[i].v]);
        parallel_for(p.candidates.size(), workers, [&](std::size_t begin, std::size_t end) {
            for (const SampledPair &pair : sample.pairs) {
                if (pair.covered)
                    continue;
                const Distance *from_s = pair.from_s.dist.data();
                const Distance *to_t = pair.to_t.dist.data();
                const Distance dst = from_s[pair.t];
                for (std::size_t i = begin; i < end; ++i) {
                    if (!scoreable[i])
                        continue;
                    const Edge e = p.candidates[i];
                    Distance via = hop_add(from_s[e.u], 1, to_t[e.v]);
                    if (!directed)
                        via = std::min(via, hop_add(from_s[e.v], 1, to_t[e.u]));
                    if (via != kUnreachable && via <= dst)
                        ++scores[i];
                }
            }
        });

        constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min();
        struct Best {
            std::int64_t score;
            std::size_t index;
        };
        Best best{kNone, 0};
        for (std::size_t i = 0; i < p.candidates.size(); ++i)
            if (!taken[i] && scores[i] > best.score)
                best = {scores[i], i};

        if (best.score == kNone)
            break; // candidates exhausted

        const Edge chosen = p.candidates[best.index];
        const bool heuristic = !mask[chosen.u] && !mask[chosen.v];
        // A shorter-or-equal route through a target-incident edge certifies
        // coverage; for other edges it does not, so their effect is left to
        // the exact recheck at the next field refresh.
        if (!heuristic)
            for (SampledPair &pair : sample.pairs)
                if (!pair.covered && detail::newly_covers(pair, chosen, directed))
                    pair.covered = true;
        taken[best.index] = 1;
        current = current.with_edge(chosen);

        const double scaled = sample.uncovered_count * static_cast<double>(best.score) /
                              static_cast<double>(q);
        report.selected_indices.push_back(best.index);
        report.selected_edges.push_back(chosen);
        report.iterations.push_back({round, best.index, chosen, best.score, /*sampled=*/true, scaled,
                                     heuristic});
        if (heuristic)
            report.warnings.push_back("iteration " + std::to_string(round) +
                                      ": picked a non-target-incident edge on a zero sampled score");
    }

    report.coverage_after = group_coverage(current, p.targets, p.universe, workers);
    return report;
}

} // namespace centrex

#endif // CENTREX_BUS_HPP_
