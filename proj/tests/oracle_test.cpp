#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "centrex/generators.hpp"
#include "centrex/ges.hpp"
#include "centrex/instance_io.hpp"
#include "centrex/oracle.hpp"

using namespace centrex;

namespace {

Graph path_graph(NodeId n) {
    std::vector<Edge> edges;
    for (NodeId v = 0; v + 1 < n; ++v)
        edges.push_back({v, static_cast<NodeId>(v + 1)});
    return Graph(n, false, edges);
}

Graph complete_graph(NodeId n) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph(n, false, edges);
}

Graph cycle_graph(NodeId n) {
    std::vector<Edge> edges;
    for (NodeId v = 0; v < n; ++v)
        edges.push_back({v, static_cast<NodeId>((v + 1) % n)});
    return Graph(n, false, edges);
}

ProblemInstance p4_instance() {
    ProblemInstance p;
    p.graph = path_graph(4);
    p.targets = {0};
    p.setting = Setting::s1;
    p.candidates = {{0, 2}, {0, 3}};
    p.budget = 1;
    return p;
}

std::int64_t subset_gain(const ProblemInstance &p, const std::vector<std::size_t> &subset) {
    std::vector<Edge> edges;
    for (std::size_t i : subset)
        edges.push_back(p.candidates[i]);
    const auto before = oracle::dag_coverage(p.graph, p.targets, p.universe);
    const auto after = oracle::dag_coverage(p.graph.with_edges(edges), p.targets, p.universe);
    return static_cast<std::int64_t>(after) - static_cast<std::int64_t>(before);
}

} // namespace

TEST_CASE("dag coverage agrees with the distance predicate on fixtures") {
    CHECK(oracle::dag_coverage(path_graph(5), {2}, PairUniverse::all()) == 4);
    CHECK(oracle::dag_coverage(cycle_graph(6), {0}, PairUniverse::all()) == 3);
    const Graph star(6, false, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    CHECK(oracle::dag_coverage(star, {0}, PairUniverse::all()) == 10);
}

TEST_CASE("single-edge graphs cover nothing") {
    const Graph g(3, false, std::vector<Edge>{{0, 1}});
    CHECK(oracle::dag_coverage(g, {2}, PairUniverse::all()) == 0);
}

TEST_CASE("complete graphs cover nothing") {
    CHECK(oracle::dag_coverage(complete_graph(4), {1}, PairUniverse::all()) == 0);
}

TEST_CASE("the two coverage predicates agree pair by pair") {
    Rng rng(888);
    for (int trial = 0; trial < 30; ++trial) {
        Rng r = rng.split(trial);
        const NodeId n = static_cast<NodeId>(5 + r.below(8));
        const bool directed = trial % 2 == 1;
        const Graph g = gnp(n, 0.15 + 0.3 * r.next_double(), directed, r);
        const std::vector<NodeId> targets{static_cast<NodeId>(r.below(n))};
        const auto mask = make_mask(n, targets);
        for (NodeId s = 0; s < n; ++s) {
            if (mask[s])
                continue;
            const DistanceField ds = bfs(g, s);
            const auto oracle_dist = oracle::hop_distances(g, s);
            for (NodeId t = 0; t < n; ++t) {
                if (t == s || mask[t])
                    continue;
                const DistanceField dt = bfs(g, t, directed);
                const bool via_distances = pair_covered(g, s, t, targets, ds, dt);
                const bool via_dag = oracle::dag_pair_covered(g, s, t, mask, oracle_dist);
                CHECK(via_distances == via_dag);
            }
        }
    }
}

TEST_CASE("the two coverage routes agree on random graphs") {
    Rng rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        Rng r = rng.split(trial);
        const NodeId n = static_cast<NodeId>(5 + r.below(16));
        const bool directed = trial % 2 == 1;
        const Graph g = gnp(n, 0.1 + 0.35 * r.next_double(), directed, r);
        std::vector<NodeId> targets{static_cast<NodeId>(r.below(n))};
        const NodeId second = static_cast<NodeId>(r.below(n));
        if (second != targets[0]) {
            targets.push_back(second);
            std::sort(targets.begin(), targets.end());
        }
        const auto state = group_coverage(g, targets, PairUniverse::all());
        CHECK(oracle::dag_coverage(g, targets, PairUniverse::all()) == state.covered);
    }
}

TEST_CASE("brute force finds the optimum on the path fixture") {
    const auto result = oracle::brute_force_opt(p4_instance());
    CHECK(result.best_gain == 1);
    CHECK(result.best_subset == std::vector<std::size_t>{1});
}

TEST_CASE("a full budget evaluates the whole candidate set") {
    ProblemInstance p = p4_instance();
    p.budget = 2;
    const auto result = oracle::brute_force_opt(p);
    CHECK(result.best_gain == 1); // adding (a,c) on top of (a,d) adds nothing
}

TEST_CASE("zero-gain candidate sets report an empty optimum") {
    // K4 plus a pendant target: every non-target pair is adjacent, so no
    // candidate can ever cover anything.
    ProblemInstance p;
    p.graph = Graph(5, false, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
    p.targets = {4};
    p.setting = Setting::s1;
    p.candidates = build_candidates(p.graph, p.targets, p.setting);
    p.budget = 1;
    const auto result = oracle::brute_force_opt(p);
    CHECK(result.best_gain == 0);
    CHECK(result.best_subset.empty());
}

TEST_CASE("the subset guard refuses combinatorial blowups") {
    ProblemInstance p;
    p.graph = path_graph(30);
    p.targets = {0};
    p.setting = Setting::s1;
    p.candidates = build_candidates(p.graph, p.targets, p.setting);
    p.budget = static_cast<int>(p.candidates.size());
    CHECK_THROWS_AS(oracle::brute_force_opt(p, /*subset_guard=*/1000), GuardError);
}

TEST_CASE("brute force never trails the greedy result") {
    Rng rng(606);
    for (int trial = 0; trial < 25; ++trial) {
        Rng r = rng.split(trial);
        const NodeId n = static_cast<NodeId>(6 + r.below(6));
        const Graph g = gnp(n, 0.25 + 0.2 * r.next_double(), false, r);
        ProblemInstance p;
        p.graph = g;
        p.targets = {static_cast<NodeId>(r.below(n))};
        p.setting = Setting::s1;
        try {
            p.candidates = build_candidates(g, p.targets, p.setting);
        } catch (const ValidationError &) {
            continue;
        }
        while (p.candidates.size() > 6)
            p.candidates.erase(p.candidates.begin() +
                               static_cast<std::ptrdiff_t>(r.below(p.candidates.size())));
        p.budget = static_cast<int>(1 + r.below(std::min<std::size_t>(3, p.candidates.size())));

        const auto oracle_result = oracle::brute_force_opt(p);
        const SelectionReport greedy = run_ges(p);
        CHECK(oracle_result.best_gain >= greedy.exact_gain());
    }
}

TEST_CASE("certification accepts single-edge attributable instances") {
    const ProblemInstance p = p4_instance();
    CHECK(oracle::certify_unique_edge_coverage(p, {0}));
    CHECK(oracle::certify_unique_edge_coverage(p, {1}));
    CHECK(oracle::certify_unique_edge_coverage(p, {0, 1}));
    CHECK(oracle::certify_unique_edge_coverage(p, {}));
    CHECK(oracle::certify_instance(p));
}

TEST_CASE("certification rejects pairs that need two added edges") {
    // Path a-c-b with an isolated target x: adding (a,x) and (b,x) covers
    // (a,b) only through both new edges at once.
    ProblemInstance p;
    p.graph = Graph(4, false, std::vector<Edge>{{0, 2}, {2, 1}});
    p.targets = {3};
    p.setting = Setting::s1;
    p.candidates = build_candidates(p.graph, p.targets, p.setting); // (0,3) (1,3) (2,3)
    p.budget = 2;
    REQUIRE(p.candidates.size() == 3);
    CHECK_FALSE(oracle::certify_unique_edge_coverage(p, {0, 1}));
    CHECK_FALSE(oracle::certify_instance(p));
}

TEST_CASE("witness search finds undirected violations") {
    Rng rng(11);
    const auto witness = oracle::find_non_submodular_witness(Setting::s1, rng, 20'000);
    REQUIRE(witness.has_value());
    CHECK(witness->base_gain_delta < witness->super_gain_delta);

    // Replay the inequality from scratch.
    auto base_plus = witness->base;
    base_plus.push_back(witness->extra);
    auto super_plus = witness->super;
    super_plus.push_back(witness->extra);
    const std::int64_t lhs = subset_gain(witness->instance, base_plus) -
                             subset_gain(witness->instance, witness->base);
    const std::int64_t rhs = subset_gain(witness->instance, super_plus) -
                             subset_gain(witness->instance, witness->super);
    CHECK(lhs < rhs);
}

TEST_CASE("witness search finds directed violations") {
    Rng rng(12);
    const auto witness = oracle::find_non_submodular_witness(Setting::s4_directed, rng, 20'000);
    REQUIRE(witness.has_value());
    CHECK(witness->base_gain_delta < witness->super_gain_delta);
}

TEST_CASE("no certified instance ever violates diminishing returns") {
    Rng rng(13);
    const auto witness =
        oracle::find_non_submodular_witness(Setting::s1, rng, 5'000, /*require_certified=*/true);
    CHECK_FALSE(witness.has_value());
}

TEST_CASE("frozen witness fixtures replay") {
    for (const char *name : {"witness_s1.instance", "witness_s4.instance"}) {
        std::ifstream in(std::string(CENTREX_FIXTURE_DIR) + "/" + name);
        REQUIRE(in.good());
        const ParsedInstance parsed = parse_instance(in);
        REQUIRE(parsed.witness.has_value());

        auto base_plus = parsed.witness->base;
        base_plus.push_back(parsed.witness->extra);
        auto super_plus = parsed.witness->super;
        super_plus.push_back(parsed.witness->extra);
        const std::int64_t lhs = subset_gain(parsed.instance, base_plus) -
                                 subset_gain(parsed.instance, parsed.witness->base);
        const std::int64_t rhs = subset_gain(parsed.instance, super_plus) -
                                 subset_gain(parsed.instance, parsed.witness->super);
        CHECK(lhs < rhs);
    }
}
