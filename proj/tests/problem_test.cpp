#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "centrex/generators.hpp"
#include "centrex/instance_io.hpp"
#include "centrex/problem.hpp"

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

} // namespace

TEST_CASE("candidate construction on a path") {
    const auto candidates = build_candidates(path_graph(3), {0}, Setting::s1);
    REQUIRE(candidates.size() == 1);
    CHECK(candidates[0] == Edge{0, 2});
}

TEST_CASE("complete graphs admit no candidates") {
    CHECK_THROWS_AS(build_candidates(complete_graph(3), {0}, Setting::s1), ValidationError);
}

TEST_CASE("directed target-incident candidates enumerate both orientations") {
    const Graph g(3, true, std::vector<Edge>{{0, 1}, {1, 2}});
    const auto candidates = build_candidates(g, {2}, Setting::s4_directed);
    // (1,2) exists; the absent target-incident arcs are these three.
    CHECK(candidates == std::vector<Edge>{{0, 2}, {2, 0}, {2, 1}});
}

TEST_CASE("unrestricted candidates cover every absent pair") {
    const auto candidates = build_candidates(path_graph(4), {0}, Setting::s0);
    CHECK(candidates == std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}});
}

TEST_CASE("target-incident candidate count matches the direct formula") {
    Rng rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        Rng r = rng.split(trial);
        const NodeId n = static_cast<NodeId>(6 + r.below(25));
        const Graph g = gnp(n, 0.25, false, r);
        std::vector<NodeId> targets{static_cast<NodeId>(r.below(n))};
        const NodeId second = static_cast<NodeId>(r.below(n));
        if (second != targets[0])
            targets.push_back(second);
        std::sort(targets.begin(), targets.end());

        std::size_t existing = 0;
        const auto mask = make_mask(n, targets);
        for (NodeId x : targets)
            for (NodeId v : g.neighbors(x))
                if (!mask[v])
                    ++existing;

        std::size_t expected = targets.size() * (n - targets.size()) - existing;
        try {
            CHECK(build_candidates(g, targets, Setting::s1).size() == expected);
        } catch (const ValidationError &) {
            CHECK(expected == 0);
        }
    }
}

TEST_CASE("validation flags every violation at once") {
    ProblemInstance p;
    p.graph = path_graph(4);
    p.targets = {0};
    p.setting = Setting::s1;
    p.candidates = {{0, 1}, {0, 2}, {0, 2}}; // present + duplicate
    p.budget = 5;                            // exceeds candidates

    const auto issues = validate(p);
    REQUIRE(issues.size() >= 3);
    bool present = false, duplicate = false, budget = false;
    for (const auto &issue : issues) {
        present |= issue.find("already present") != std::string::npos;
        duplicate |= issue.find("duplicate") != std::string::npos;
        budget |= issue.find("budget exceeds") != std::string::npos;
    }
    CHECK(present);
    CHECK(duplicate);
    CHECK(budget);
}

TEST_CASE("a well-formed instance validates cleanly") {
    ProblemInstance p;
    p.graph = path_graph(4);
    p.targets = {0};
    p.setting = Setting::s1;
    p.candidates = build_candidates(p.graph, p.targets, p.setting);
    p.budget = 1;
    CHECK(validate(p).empty());
}

TEST_CASE("pairs touching the target set are rejected") {
    ProblemInstance p;
    p.graph = path_graph(4);
    p.targets = {0};
    p.setting = Setting::s1;
    p.candidates = build_candidates(p.graph, p.targets, p.setting);
    p.budget = 1;
    p.universe = PairUniverse::explicit_pairs({{0, 2}});
    const auto issues = validate(p);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].find("touches the target set") != std::string::npos);
}

TEST_CASE("instance files round-trip") {
    ProblemInstance p;
    p.graph = path_graph(5);
    p.tokens = {"a", "b", "c", "d", "e"};
    p.targets = {2};
    p.setting = Setting::s1;
    p.candidates = build_candidates(p.graph, p.targets, p.setting);
    p.budget = 2;

    const std::string text = serialize_instance(p);
    const ParsedInstance parsed = parse_instance(text);
    CHECK(parsed.instance.graph == p.graph);
    CHECK(parsed.instance.tokens == p.tokens);
    CHECK(parsed.instance.targets == p.targets);
    CHECK(parsed.instance.candidates == p.candidates);
    CHECK(parsed.instance.budget == p.budget);
    CHECK(parsed.instance.setting == p.setting);
    CHECK(parsed.instance.universe.all_pairs);
    CHECK_FALSE(parsed.witness.has_value());
}

TEST_CASE("isolated nodes survive the node table") {
    // Path plus an isolated target; only the node table can declare it.
    ProblemInstance p;
    p.graph = Graph(6, false, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    p.targets = {5};
    p.setting = Setting::s1;
    p.candidates = build_candidates(p.graph, p.targets, p.setting);
    p.budget = 1;

    const ParsedInstance parsed = parse_instance(serialize_instance(p));
    CHECK(parsed.instance.graph.node_count() == 6);
    CHECK(parsed.instance.targets == std::vector<NodeId>{5});
    CHECK(parsed.instance.candidates.size() == 5);
}

TEST_CASE("witness sections round-trip") {
    ProblemInstance p;
    p.graph = path_graph(4);
    p.targets = {0};
    p.setting = Setting::s1;
    p.candidates = build_candidates(p.graph, p.targets, p.setting);
    p.budget = 2;

    WitnessIndices w;
    w.base = {};
    w.super = {0};
    w.extra = 1;
    const ParsedInstance parsed = parse_instance(serialize_instance(p, &w));
    REQUIRE(parsed.witness.has_value());
    CHECK(parsed.witness->base.empty());
    CHECK(parsed.witness->super == std::vector<std::size_t>{0});
    CHECK(parsed.witness->extra == 1);
}

TEST_CASE("auto candidate sections rebuild the candidate list") {
    const std::string text = "centrex-instance/1\n"
                             "directed 0\n"
                             "k 1\n"
                             "setting s1\n"
                             "[graph]\n"
                             "a b\nb c\n"
                             "[targets]\n"
                             "a\n"
                             "[candidates]\n"
                             "auto s1\n"
                             "[pairs]\n"
                             "all\n";
    const ParsedInstance parsed = parse_instance(text);
    CHECK(parsed.instance.candidates == std::vector<Edge>{{0, 2}});
    CHECK(validate(parsed.instance).empty());
}
