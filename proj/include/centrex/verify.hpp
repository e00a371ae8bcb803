#ifndef CENTREX_VERIFY_HPP_
#define CENTREX_VERIFY_HPP_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "centrex/baselines.hpp"
#include "centrex/bus.hpp"
#include "centrex/generators.hpp"
#include "centrex/ges.hpp"
#include "centrex/instance_io.hpp"
#include "centrex/metrics.hpp"
#include "centrex/oracle.hpp"
#include "centrex/problem.hpp"

// Statistical property checks shared by the verify CLI command and the
// acceptance suite. Every check is a pure function of its seed.
namespace centrex::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    nlohmann::ordered_json stats;
};

inline void print(const CheckResult &result) {
    std::string line = result.pass ? "[PASS] " : "[FAIL] ";
    line += result.name;
    for (const auto &[key, value] : result.stats.items()) {
        if (key == "witness-instance")
            continue; // multi-line payload, printed by the caller on request
        line += " " + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
    }
    std::puts(line.c_str());
    std::fflush(stdout);
}

inline double elapsed_s(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

struct SmallInstanceOptions {
    NodeId min_nodes = 6;
    NodeId max_nodes = 12;
    std::size_t max_candidates = 8;
    int max_budget = 3;
    bool require_certified = true;
    bool require_uncovered = true;
};

// Random target-incident instance; loops until the draw validates (and
// certifies, when asked). Deterministic in the rng state.
inline ProblemInstance random_small_instance(Rng &rng, const SmallInstanceOptions &opts = {}) {
    for (;;) {
        const NodeId n = static_cast<NodeId>(opts.min_nodes + rng.below(opts.max_nodes - opts.min_nodes + 1));
        Graph g = rng.chance(0.5) ? random_connected(n, 1 + rng.below(n), rng)
                                  : gnp(n, 0.15 + 0.35 * rng.next_double(), false, rng);

        ProblemInstance p;
        p.graph = g;
        p.targets = {static_cast<NodeId>(rng.below(n))};
        if (rng.chance(0.3)) {
            const NodeId second = static_cast<NodeId>(rng.below(n));
            if (second != p.targets[0])
                p.targets.push_back(second);
            std::sort(p.targets.begin(), p.targets.end());
        }
        p.setting = Setting::s1;
        try {
            p.candidates = build_candidates(g, p.targets, p.setting);
        } catch (const ValidationError &) {
            continue;
        }
        while (p.candidates.size() > opts.max_candidates)
            p.candidates.erase(p.candidates.begin() +
                               static_cast<std::ptrdiff_t>(rng.below(p.candidates.size())));
        p.budget = static_cast<int>(
            1 + rng.below(std::min<std::size_t>(opts.max_budget, p.candidates.size())));
        if (!validate(p).empty())
            continue;
        if (opts.require_uncovered && group_coverage(p.graph, p.targets, p.universe).uncovered == 0)
            continue;
        if (opts.require_certified && !oracle::certify_instance(p))
            continue;
        return p;
    }
}

// Greedy gain vs. exhaustive optimum on certified instances: the ratio must
// clear 1 - 1/e on every one.
inline CheckResult approx_ratio(std::size_t instances, std::uint64_t seed, int threads = 1) {
    const auto start = std::chrono::steady_clock::now();
    const double bound = 1.0 - 1.0 / std::exp(1.0);
    Rng rng(seed);
    double min_ratio = 1.0;
    std::size_t failures = 0;
    std::size_t redraws = 0;

    for (std::size_t i = 0; i < instances; ++i) {
        Rng r = rng.split(i);
        // Only instances with an achievable optimum make the ratio meaningful.
        ProblemInstance p;
        std::int64_t opt = 0;
        for (;;) {
            p = random_small_instance(r);
            opt = oracle::brute_force_opt(p, 1'000'000, threads).best_gain;
            if (opt > 0)
                break;
            ++redraws;
        }
        const SelectionReport greedy = run_ges(p, {.stop_on_zero_gain = false, .threads = threads});
        const double ratio = static_cast<double>(greedy.exact_gain()) / static_cast<double>(opt);
        min_ratio = std::min(min_ratio, ratio);
        if (ratio < bound - 1e-12)
            ++failures;
    }

    CheckResult result;
    result.name = "approx-ratio";
    result.pass = failures == 0;
    result.stats["instances"] = instances;
    result.stats["zero-opt-redraws"] = redraws;
    result.stats["min-ratio"] = min_ratio;
    result.stats["bound"] = bound;
    result.stats["violations"] = failures;
    result.stats["elapsed-s"] = elapsed_s(start);
    return result;
}

// Diminishing returns and non-negative marginals on certified instances.
inline CheckResult monotone_submodular(std::size_t trials, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(seed);
    std::size_t submodular_violations = 0;
    std::size_t negative_gains = 0;
    std::size_t done = 0;

    auto gain_of = [](const ProblemInstance &p, const std::vector<std::size_t> &subset) {
        std::vector<Edge> edges;
        for (std::size_t i : subset)
            edges.push_back(p.candidates[i]);
        const auto before = group_coverage(p.graph, p.targets, p.universe);
        const auto after = group_coverage(p.graph.with_edges(edges), p.targets, p.universe);
        return static_cast<std::int64_t>(after.covered) - static_cast<std::int64_t>(before.covered);
    };

    for (std::size_t block = 0; done < trials; ++block) {
        Rng r = rng.split(block);
        const ProblemInstance p = random_small_instance(r);
        if (p.candidates.size() < 2)
            continue;

        const SelectionReport greedy = run_ges(p);
        for (const IterationRecord &it : greedy.iterations)
            if (it.gain < 0)
                ++negative_gains;

        for (int probe = 0; probe < 5 && done < trials; ++probe) {
            // base strictly inside super, extra outside super
            const std::size_t extra = r.below(p.candidates.size());
            std::vector<std::size_t> super;
            for (std::size_t i = 0; i < p.candidates.size(); ++i)
                if (i != extra && r.chance(0.4))
                    super.push_back(i);
            if (super.empty())
                continue;
            std::vector<std::size_t> base;
            for (std::size_t i : super)
                if (r.chance(0.5))
                    base.push_back(i);
            if (base.size() == super.size())
                base.pop_back();

            auto plus = [&](std::vector<std::size_t> s) {
                s.push_back(extra);
                return s;
            };
            const std::int64_t lhs = gain_of(p, plus(base)) - gain_of(p, base);
            const std::int64_t rhs = gain_of(p, plus(super)) - gain_of(p, super);
            if (lhs < 0 || rhs < 0)
                ++negative_gains;
            if (lhs < rhs)
                ++submodular_violations;
            ++done;
        }
    }

    CheckResult result;
    result.name = "monotone-submodular";
    result.pass = submodular_violations == 0 && negative_gains == 0;
    result.stats["trials"] = done;
    result.stats["submodular-violations"] = submodular_violations;
    result.stats["negative-gains"] = negative_gains;
    result.stats["elapsed-s"] = elapsed_s(start);
    return result;
}

// Witness existence where the objective is known not to be submodular, and
// absence on certified instances.
inline CheckResult witness_search(Setting setting, bool require_certified, std::uint64_t max_tries,
                                  std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(seed);
    const auto witness = oracle::find_non_submodular_witness(setting, rng, max_tries, require_certified);

    CheckResult result;
    result.name = std::string("witness-") + to_string(setting) + (require_certified ? "-certified" : "");
    // A witness must exist in the raw settings and must never exist once
    // instances are certified.
    result.pass = require_certified ? !witness.has_value() : witness.has_value();
    result.stats["max-tries"] = max_tries;
    result.stats["found"] = witness.has_value();
    if (witness) {
        result.stats["base-delta"] = witness->base_gain_delta;
        result.stats["super-delta"] = witness->super_gain_delta;
        result.stats["nodes"] = witness->instance.graph.node_count();
        const WitnessIndices indices{witness->base, witness->super, witness->extra};
        result.stats["witness-instance"] = serialize_instance(witness->instance, &indices);
    }
    result.stats["elapsed-s"] = elapsed_s(start);
    return result;
}

namespace detail {

// Deterministic estimator test bed: a small instance, a fixed edge subset
// with exact gain >= min_gain, the materialized uncovered pairs, and
// per-pair coverage flags under the subset.
struct EstimatorBed {
    ProblemInstance instance;
    std::vector<Edge> chosen;
    std::vector<char> covered_by_chosen; // per uncovered pair
    std::uint64_t uncovered = 0;
    std::int64_t exact_gain = 0;
};

inline EstimatorBed make_estimator_bed(std::uint64_t seed, std::int64_t min_gain) {
    Rng rng(seed);
    for (std::uint64_t attempt = 0;; ++attempt) {
        Rng r = rng.split(attempt);
        SmallInstanceOptions opts;
        opts.min_nodes = 10;
        opts.max_nodes = 14;
        opts.max_candidates = 6;
        opts.max_budget = 2;
        opts.require_certified = false;
        const ProblemInstance p = random_small_instance(r, opts);

        const SelectionReport greedy = run_ges(p);
        if (greedy.exact_gain() < min_gain || greedy.selected_edges.empty())
            continue;

        EstimatorBed bed;
        bed.instance = p;
        bed.chosen = greedy.selected_edges;
        const auto uncovered = enumerate_uncovered(p.graph, p.targets, p.universe);
        bed.uncovered = uncovered.size();
        const Graph modified = p.graph.with_edges(bed.chosen);
        bed.covered_by_chosen.resize(uncovered.size());
        for (std::size_t i = 0; i < uncovered.size(); ++i) {
            const auto [s, t] = uncovered[i];
            bed.covered_by_chosen[i] = pair_covered(modified, s, t, p.targets, bfs(modified, s),
                                                    bfs(modified, t, modified.directed()));
        }
        bed.exact_gain = greedy.exact_gain();
        return bed;
    }
}

} // namespace detail

// Mean of the scaled sampled gain over many resamples stays within the
// given relative error of the exact gain.
inline CheckResult estimator_unbiasedness(std::size_t resamples, std::uint64_t seed,
                                          double tolerance = 0.02) {
    const auto start = std::chrono::steady_clock::now();
    const auto bed = detail::make_estimator_bed(seed, /*min_gain=*/5);
    const std::size_t q = 20;
    Rng rng(seed ^ 0xabcdef);

    double sum = 0;
    for (std::size_t trial = 0; trial < resamples; ++trial) {
        Rng r = rng.split(trial);
        std::size_t flagged = 0;
        for (std::size_t i = 0; i < q; ++i)
            flagged += bed.covered_by_chosen[r.below(bed.uncovered)] ? 1 : 0;
        sum += static_cast<double>(bed.uncovered) * static_cast<double>(flagged) /
               static_cast<double>(q);
    }
    const double mean = sum / static_cast<double>(resamples);
    const double rel_err = std::abs(mean - static_cast<double>(bed.exact_gain)) /
                           static_cast<double>(bed.exact_gain);

    CheckResult result;
    result.name = "estimator-unbiasedness";
    result.pass = rel_err <= tolerance;
    result.stats["resamples"] = resamples;
    result.stats["sample-size"] = q;
    result.stats["exact-gain"] = bed.exact_gain;
    result.stats["uncovered"] = bed.uncovered;
    result.stats["mean-estimate"] = mean;
    result.stats["relative-error"] = rel_err;
    result.stats["tolerance"] = tolerance;
    result.stats["elapsed-s"] = elapsed_s(start);
    return result;
}

// With the bound-free sample size at the given epsilon, the fraction of
// trials where any small subset's estimate strays by epsilon * m_u must not
// exceed 2 |candidates|^-l (zero failures expected).
inline CheckResult estimator_concentration(std::size_t trials, std::uint64_t seed, double epsilon = 0.3,
                                           int confidence_l = 1) {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(seed);

    // Small certified-free instance with a tiny candidate set.
    ProblemInstance p;
    for (std::uint64_t attempt = 0;; ++attempt) {
        Rng r = rng.split(attempt);
        SmallInstanceOptions opts;
        opts.min_nodes = 10;
        opts.max_nodes = 14;
        opts.max_candidates = 4;
        opts.max_budget = 2;
        opts.require_certified = false;
        p = random_small_instance(r, opts);
        if (p.candidates.size() == 4 &&
            group_coverage(p.graph, p.targets, p.universe).uncovered >= 8)
            break;
    }
    p.budget = 2;

    const auto uncovered = enumerate_uncovered(p.graph, p.targets, p.universe);
    const std::uint64_t m_u = uncovered.size();
    const std::size_t q = sample_size_budget_only(confidence_l, p.budget, p.candidates.size(), epsilon);

    // Exact gain and per-pair flags for every subset of size <= budget.
    const auto subsets = oracle::detail::enumerate_subsets(p.candidates.size(),
                                                           static_cast<std::size_t>(p.budget), 1'000);
    std::vector<std::vector<char>> flags(subsets.size());
    std::vector<std::int64_t> exact(subsets.size());
    for (std::size_t si = 0; si < subsets.size(); ++si) {
        std::vector<Edge> edges;
        for (std::size_t i : subsets[si])
            edges.push_back(p.candidates[i]);
        const Graph modified = p.graph.with_edges(edges);
        flags[si].resize(m_u);
        std::int64_t gain = 0;
        for (std::size_t i = 0; i < m_u; ++i) {
            const auto [s, t] = uncovered[i];
            flags[si][i] =
                pair_covered(modified, s, t, p.targets, bfs(modified, s), bfs(modified, t));
            gain += flags[si][i];
        }
        exact[si] = gain;
    }

    const double margin = epsilon * static_cast<double>(m_u);
    const double bound = 2.0 * std::pow(static_cast<double>(p.candidates.size()),
                                        -static_cast<double>(confidence_l));
    std::size_t failures = 0;
    Rng trial_rng(seed ^ 0x5eed);
    std::vector<std::size_t> draw(q);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        Rng r = trial_rng.split(trial);
        for (std::size_t i = 0; i < q; ++i)
            draw[i] = static_cast<std::size_t>(r.below(m_u));
        bool bad = false;
        for (std::size_t si = 0; si < subsets.size() && !bad; ++si) {
            std::size_t hit = 0;
            for (std::size_t i : draw)
                hit += flags[si][i] ? 1 : 0;
            const double estimate =
                static_cast<double>(m_u) * static_cast<double>(hit) / static_cast<double>(q);
            if (std::abs(estimate - static_cast<double>(exact[si])) >= margin)
                bad = true;
        }
        failures += bad ? 1 : 0;
    }

    const double rate = static_cast<double>(failures) / static_cast<double>(trials);
    CheckResult result;
    result.name = "estimator-concentration";
    result.pass = rate <= bound;
    result.stats["trials"] = trials;
    result.stats["sample-size"] = q;
    result.stats["epsilon"] = epsilon;
    result.stats["uncovered"] = m_u;
    result.stats["subsets"] = subsets.size();
    result.stats["failures"] = failures;
    result.stats["rate"] = rate;
    result.stats["bound"] = bound;
    result.stats["elapsed-s"] = elapsed_s(start);
    return result;
}

// Exhaustive-sample selection must equal the exact greedy selection.
inline CheckResult exhaustive_equivalence(std::size_t instances, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(seed);
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < instances; ++i) {
        Rng r = rng.split(i);
        SmallInstanceOptions opts;
        opts.require_certified = false;
        const ProblemInstance p = random_small_instance(r, opts);
        const SelectionReport greedy = run_ges(p);
        const SelectionReport sampled = run_bus(p, SamplePlan::exhaustive(), seed + i);
        if (greedy.selected_indices != sampled.selected_indices ||
            greedy.coverage_after.covered != sampled.coverage_after.covered)
            ++mismatches;
    }
    CheckResult result;
    result.name = "exhaustive-equivalence";
    result.pass = mismatches == 0;
    result.stats["instances"] = instances;
    result.stats["mismatches"] = mismatches;
    result.stats["elapsed-s"] = elapsed_s(start);
    return result;
}

// The distance-sum predicate and the DAG-marking predicate must count
// exactly the same coverage.
inline CheckResult oracle_equivalence(std::size_t graphs, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(seed);
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < graphs; ++i) {
        Rng r = rng.split(i);
        const NodeId n = static_cast<NodeId>(5 + r.below(16));
        const bool directed = i % 2 == 1;
        const Graph g = gnp(n, 0.1 + 0.35 * r.next_double(), directed, r);
        std::vector<NodeId> targets{static_cast<NodeId>(r.below(n))};
        const NodeId second = static_cast<NodeId>(r.below(n));
        if (second != targets[0]) {
            targets.push_back(second);
            std::sort(targets.begin(), targets.end());
        }
        const auto state = group_coverage(g, targets, PairUniverse::all());
        if (oracle::dag_coverage(g, targets, PairUniverse::all()) != state.covered)
            ++mismatches;
    }
    CheckResult result;
    result.name = "oracle-equivalence";
    result.pass = mismatches == 0;
    result.stats["graphs"] = graphs;
    result.stats["mismatches"] = mismatches;
    result.stats["elapsed-s"] = elapsed_s(start);
    return result;
}

// Scaled-down stand-in for the reported comparisons: on preferential
// attachment graphs the sampler must beat every baseline on most seeds and
// double the random baseline in the median.
inline CheckResult baseline_dominance(std::size_t seeds, std::uint64_t seed, int threads = 1,
                                      NodeId nodes = 2000, std::size_t samples = 1000, int budget = 10,
                                      std::size_t target_count = 5) {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(seed);
    std::size_t bus_wins_all = 0;
    std::vector<double> random_ratios;
    std::size_t wins_acc = 0, wins_degree = 0, wins_random = 0;

    for (std::size_t i = 0; i < seeds; ++i) {
        Rng r = rng.split(i);
        Graph g = barabasi_albert(nodes, 3, r);

        ProblemInstance p;
        std::vector<NodeId> targets;
        while (targets.size() < target_count) {
            const NodeId v = static_cast<NodeId>(r.below(nodes));
            if (std::find(targets.begin(), targets.end(), v) == targets.end())
                targets.push_back(v);
        }
        std::sort(targets.begin(), targets.end());
        p.graph = std::move(g);
        p.targets = targets;
        p.setting = Setting::s1;
        p.candidates = build_candidates(p.graph, p.targets, p.setting);
        p.budget = budget;

        BusOptions opts;
        opts.threads = threads;
        const std::int64_t bus_gain =
            run_bus(p, SamplePlan::manual(samples), seed + i, opts).exact_gain();
        const std::int64_t acc_gain = high_acc(p, samples, seed + i, threads).exact_gain();
        const std::int64_t degree_gain = high_degree(p, seed + i, threads).exact_gain();
        const std::int64_t random_gain = random_edges(p, seed + i, threads).exact_gain();

        const bool beats_acc = bus_gain >= acc_gain;
        const bool beats_degree = bus_gain >= degree_gain;
        const bool beats_random = bus_gain >= random_gain;
        wins_acc += beats_acc;
        wins_degree += beats_degree;
        wins_random += beats_random;
        bus_wins_all += (beats_acc && beats_degree && beats_random) ? 1 : 0;
        random_ratios.push_back(random_gain <= 0 ? std::numeric_limits<double>::infinity()
                                                 : static_cast<double>(bus_gain) /
                                                       static_cast<double>(random_gain));
    }

    std::sort(random_ratios.begin(), random_ratios.end());
    const double median_ratio = random_ratios.empty() ? 0.0 : random_ratios[random_ratios.size() / 2];
    const double win_rate = static_cast<double>(bus_wins_all) / static_cast<double>(seeds);

    CheckResult result;
    result.name = "baseline-dominance";
    result.pass = win_rate >= 0.9 && median_ratio >= 2.0;
    result.stats["seeds"] = seeds;
    result.stats["win-rate"] = win_rate;
    result.stats["wins-vs-adaptive-cover"] = wins_acc;
    result.stats["wins-vs-degree"] = wins_degree;
    result.stats["wins-vs-random"] = wins_random;
    result.stats["median-ratio-vs-random"] =
        std::isinf(median_ratio) ? nlohmann::ordered_json("inf") : nlohmann::ordered_json(median_ratio);
    result.stats["elapsed-s"] = elapsed_s(start);
    return result;
}

// Wall time of the sampler against the budget must fit a straight line.
inline CheckResult budget_scaling(std::uint64_t seed, int threads = 1, NodeId nodes = 2000,
                                  std::size_t samples = 500, double min_r2 = 0.95) {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(seed);
    Graph g = barabasi_albert(nodes, 3, rng);

    ProblemInstance p;
    std::vector<NodeId> targets;
    while (targets.size() < 5) {
        const NodeId v = static_cast<NodeId>(rng.below(nodes));
        if (std::find(targets.begin(), targets.end(), v) == targets.end())
            targets.push_back(v);
    }
    std::sort(targets.begin(), targets.end());
    p.graph = std::move(g);
    p.targets = targets;
    p.setting = Setting::s1;
    p.candidates = build_candidates(p.graph, p.targets, p.setting);

    const std::vector<int> budgets{5, 10, 20, 40};
    std::vector<double> times;
    BusOptions opts;
    opts.threads = threads;
    for (const int budget : budgets) {
        p.budget = budget;
        double best = std::numeric_limits<double>::infinity();
        for (int rep = 0; rep < 3; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            (void)run_bus(p, SamplePlan::manual(samples), seed, opts);
            best = std::min(best, elapsed_s(t0));
        }
        times.push_back(best);
    }

    // Least-squares line over (budget, time).
    const double n = static_cast<double>(budgets.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < budgets.size(); ++i) {
        sx += budgets[i];
        sy += times[i];
        sxx += static_cast<double>(budgets[i]) * budgets[i];
        sxy += budgets[i] * times[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    for (std::size_t i = 0; i < budgets.size(); ++i) {
        const double fit = intercept + slope * budgets[i];
        ss_res += (times[i] - fit) * (times[i] - fit);
        ss_tot += (times[i] - sy / n) * (times[i] - sy / n);
    }
    const double r2 = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;

    CheckResult result;
    result.name = "budget-scaling";
    result.pass = r2 >= min_r2 && slope > 0;
    result.stats["budgets"] = budgets;
    result.stats["times-s"] = times;
    result.stats["slope"] = slope;
    result.stats["r2"] = r2;
    result.stats["min-r2"] = min_r2;
    result.stats["elapsed-s"] = elapsed_s(start);
    return result;
}

// After target-incident additions: mean distance never rises, group
// closeness never falls, and the cascade extremes are exact.
inline CheckResult side_metrics(std::size_t instances, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(seed);
    std::size_t distance_violations = 0;
    std::size_t closeness_violations = 0;
    std::size_t cascade_violations = 0;

    for (std::size_t i = 0; i < instances; ++i) {
        Rng r = rng.split(i);
        const NodeId n = static_cast<NodeId>(30 + r.below(51));
        Graph g = barabasi_albert(n, 2, r); // connected, so the pair set is stable

        ProblemInstance p;
        p.graph = std::move(g);
        p.targets = {static_cast<NodeId>(r.below(n / 2)),
                     static_cast<NodeId>(n / 2 + r.below(n / 2))};
        p.setting = Setting::s1;
        try {
            p.candidates = build_candidates(p.graph, p.targets, p.setting);
        } catch (const ValidationError &) {
            continue;
        }
        p.budget = static_cast<int>(std::min<std::size_t>(3, p.candidates.size()));
        if (group_coverage(p.graph, p.targets, p.universe).uncovered == 0)
            continue;

        const SelectionReport report = run_bus(p, SamplePlan::manual(64), seed + i);
        const Graph modified = p.graph.with_edges(report.selected_edges);

        const double dist_before = avg_distance(p.graph, 0, Rng(1)).mean;
        const double dist_after = avg_distance(modified, 0, Rng(1)).mean;
        if (dist_after > dist_before + 1e-12)
            ++distance_violations;

        const double close_before = closeness(p.graph, p.targets).value;
        const double close_after = closeness(modified, p.targets).value;
        if (close_after < close_before - 1e-12)
            ++closeness_violations;

        const double zero = ic_influence(modified, p.targets, 0.0, 64, Rng(7));
        const double one = ic_influence(modified, p.targets, 1.0, 64, Rng(7));
        const double expected_one =
            static_cast<double>(p.targets.size() + reachable_from(modified, p.targets));
        if (zero != static_cast<double>(p.targets.size()) || one != expected_one)
            ++cascade_violations;
    }

    CheckResult result;
    result.name = "side-metrics";
    result.pass = distance_violations == 0 && closeness_violations == 0 && cascade_violations == 0;
    result.stats["instances"] = instances;
    result.stats["distance-violations"] = distance_violations;
    result.stats["closeness-violations"] = closeness_violations;
    result.stats["cascade-violations"] = cascade_violations;
    result.stats["elapsed-s"] = elapsed_s(start);
    return result;
}

} // namespace centrex::verify

#endif // CENTREX_VERIFY_HPP_
