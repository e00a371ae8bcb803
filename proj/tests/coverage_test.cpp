#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "centrex/coverage.hpp"
#include "centrex/generators.hpp"
#include "centrex/graph.hpp"
#include "centrex/rng.hpp"

using namespace centrex;

namespace {

Graph path_graph(NodeId n) {
    std::vector<Edge> edges;
    for (NodeId v = 0; v + 1 < n; ++v)
        edges.push_back({v, static_cast<NodeId>(v + 1)});
    return Graph(n, false, edges);
}

Graph cycle_graph(NodeId n) {
    std::vector<Edge> edges;
    for (NodeId v = 0; v < n; ++v)
        edges.push_back({v, static_cast<NodeId>((v + 1) % n)});
    return Graph(n, false, edges);
}

Graph star_graph(NodeId leaves) {
    std::vector<Edge> edges;
    for (NodeId v = 1; v <= leaves; ++v)
        edges.push_back({0, v});
    return Graph(leaves + 1, false, edges);
}

bool pair_covered_fresh(const Graph &g, NodeId s, NodeId t, const std::vector<NodeId> &targets) {
    return pair_covered(g, s, t, targets, bfs(g, s), bfs(g, t, g.directed()));
}

} // namespace

TEST_CASE("a star center covers every leaf pair") {
    const Graph g = star_graph(5);
    CHECK(pair_covered_fresh(g, 1, 2, {0}));
}

TEST_CASE("adjacent pairs are never covered") {
    // Path a-b-c-d-e with the middle node as target: (a,b) is adjacent.
    const Graph g = path_graph(5);
    CHECK_FALSE(pair_covered_fresh(g, 0, 1, {2}));
}

TEST_CASE("coverage counts ties: one shortest path through the target is enough") {
    // Cycle of six: between 2 and 5 both three-hop routes are shortest and
    // one of them passes node 0.
    const Graph g = cycle_graph(6);
    CHECK(pair_covered_fresh(g, 2, 5, {0}));
}

TEST_CASE("unreachable pairs are uncovered") {
    const Graph g(4, false, std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK_FALSE(pair_covered_fresh(g, 0, 2, {1}));
}

TEST_CASE("group coverage on the path fixture") {
    const Graph g = path_graph(5);
    const CoverageState state = group_coverage(g, {2}, PairUniverse::all());
    CHECK(state.universe == 6); // pairs over {a,b,d,e}
    CHECK(state.covered == 4);  // {a,d} {a,e} {b,d} {b,e}
    CHECK(state.uncovered == 2);
    CHECK(state.covered_ordered() == 8);
    CHECK(state.uncovered_ordered() == 4);
}

TEST_CASE("group coverage on the star") {
    const CoverageState state = group_coverage(star_graph(5), {0}, PairUniverse::all());
    CHECK(state.covered == 10);
    CHECK(state.uncovered == 0);
}

TEST_CASE("group coverage on the six-cycle") {
    const CoverageState state = group_coverage(cycle_graph(6), {0}, PairUniverse::all());
    CHECK(state.universe == 10);
    CHECK(state.covered == 3); // {1,5} {2,5} {1,4}
}

TEST_CASE("targets equal to the whole node set give an empty universe") {
    const Graph g = path_graph(3);
    const CoverageState state = group_coverage(g, {0, 1, 2}, PairUniverse::all());
    CHECK(state.universe == 0);
    CHECK(state.covered == 0);
    CHECK(state.uncovered == 0);
}

TEST_CASE("explicit pair universes are honored") {
    const Graph g = path_graph(5);
    const auto universe = PairUniverse::explicit_pairs({{0, 4}, {0, 1}});
    const CoverageState state = group_coverage(g, {2}, universe);
    CHECK(state.universe == 2);
    CHECK(state.covered == 1); // (a,e) yes, (a,b) no
}

TEST_CASE("directed coverage uses ordered pairs") {
    // 0 -> 1 -> 2, target 1: only the ordered pair (0, 2) is covered.
    const Graph g(3, true, std::vector<Edge>{{0, 1}, {1, 2}});
    const CoverageState state = group_coverage(g, {1}, PairUniverse::all());
    CHECK(state.ordered_pairs);
    CHECK(state.universe == 2); // (0,2) and (2,0)
    CHECK(state.covered == 1);
    CHECK(state.covered_ordered() == 1);
}

TEST_CASE("group coverage is identical at any worker count") {
    Rng rng(31337);
    const Graph g = gnp(40, 0.12, false, rng);
    const CoverageState one = group_coverage(g, {3, 11}, PairUniverse::all(), 1);
    const CoverageState four = group_coverage(g, {3, 11}, PairUniverse::all(), 4);
    CHECK(one.covered == four.covered);
    CHECK(one.uncovered == four.uncovered);
}

TEST_CASE("uncovered enumeration matches the path fixture") {
    const Graph g = path_graph(5);
    const auto uncovered = enumerate_uncovered(g, {2}, PairUniverse::all());
    REQUIRE(uncovered.size() == 2);
    CHECK(uncovered[0] == std::pair<NodeId, NodeId>{0, 1});
    CHECK(uncovered[1] == std::pair<NodeId, NodeId>{3, 4});
}

TEST_CASE("samples only ever come from the uncovered set") {
    const Graph g = path_graph(5);
    const SampleSet set = sample_uncovered_pairs(g, {2}, PairUniverse::all(), 5, Rng(17));
    REQUIRE(set.size() == 5);
    for (const SampledPair &p : set.pairs) {
        const bool ab = p.s == 0 && p.t == 1;
        const bool de = p.s == 3 && p.t == 4;
        CHECK((ab || de));
        CHECK(p.from_s.dist[p.t] == 1);
        CHECK_FALSE(p.covered);
    }
}

TEST_CASE("sampling a fully covered universe reports the empty uncovered set") {
    const Graph g = star_graph(5);
    CHECK_THROWS_AS(sample_uncovered_pairs(g, {0}, PairUniverse::all(), 3, Rng(1)), ValidationError);
    CHECK_THROWS_AS(exhaustive_sample(g, {0}, PairUniverse::all()), ValidationError);
}

TEST_CASE("exhaustive sampling lists every uncovered pair exactly once") {
    const Graph g = path_graph(5);
    const SampleSet set = exhaustive_sample(g, {2}, PairUniverse::all());
    REQUIRE(set.size() == 2);
    CHECK(set.exhaustive);
    CHECK(set.uncovered_source == UncoveredCountSource::exhaustive);
    CHECK(set.uncovered_count == 2.0);
    CHECK(set.pairs[0].s == 0);
    CHECK(set.pairs[1].s == 3);
}

TEST_CASE("sampling is deterministic in the seed and worker count") {
    const Graph g = path_graph(6);
    SampleOptions serial;
    serial.threads = 1;
    SampleOptions wide;
    wide.threads = 4;
    const SampleSet a = sample_uncovered_pairs(g, {5}, PairUniverse::all(), 16, Rng(99), serial);
    const SampleSet b = sample_uncovered_pairs(g, {5}, PairUniverse::all(), 16, Rng(99), wide);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.pairs[i].s == b.pairs[i].s);
        CHECK(a.pairs[i].t == b.pairs[i].t);
    }
    CHECK(a.draws == b.draws);
}

TEST_CASE("sampling is uniform over the uncovered pairs") {
    // Path of six with the far end as target: it covers nothing, so the
    // uncovered set is all ten pairs over the first five nodes.
    const Graph g = path_graph(6);
    const auto uncovered = enumerate_uncovered(g, {5}, PairUniverse::all());
    REQUIRE(uncovered.size() == 10);

    const std::size_t draws = 50'000;
    const SampleSet set = sample_uncovered_pairs(g, {5}, PairUniverse::all(), draws, Rng(4242));
    std::map<std::pair<NodeId, NodeId>, std::size_t> counts;
    for (const SampledPair &p : set.pairs)
        ++counts[{p.s, p.t}];
    CHECK(counts.size() == 10);

    // Five standard deviations around the uniform expectation.
    const double expectation = draws / 10.0;
    const double sd = std::sqrt(draws * 0.1 * 0.9);
    for (const auto &[pair, count] : counts) {
        CHECK(count > expectation - 5 * sd);
        CHECK(count < expectation + 5 * sd);
    }
}

TEST_CASE("disconnected pairs stay uncovered and sampleable") {
    // Triangle with target 0 plus two stray connected nodes: pairs bridging
    // the components can never be covered but remain in the uncovered set.
    const Graph g(5, false, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {3, 4}});
    const auto uncovered = enumerate_uncovered(g, {0}, PairUniverse::all());
    // (1,2) adjacent; (1,3) (1,4) (2,3) (2,4) disconnected; (3,4) adjacent.
    CHECK(uncovered.size() == 6);

    const SampleSet set = sample_uncovered_pairs(g, {0}, PairUniverse::all(), 64, Rng(3));
    bool saw_cross_component = false;
    for (const SampledPair &p : set.pairs)
        saw_cross_component |= (p.from_s.dist[p.t] == kUnreachable);
    CHECK(saw_cross_component);
}

TEST_CASE("near-full coverage falls back to exact enumeration") {
    // Star plus one pendant path node: the only uncovered pairs are the
    // adjacent ones, so rejection sampling stalls and must fall back.
    std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}};
    const Graph g(6, false, edges);
    SampleOptions opts;
    opts.rejection_cap_per_node = 1; // 6 consecutive rejections trigger the fallback
    const SampleSet set = sample_uncovered_pairs(g, {0}, PairUniverse::all(), 8, Rng(5), opts);
    CHECK(set.uncovered_source == UncoveredCountSource::exact);
    for (const SampledPair &p : set.pairs)
        CHECK(p.from_s.dist[p.t] == 1); // only adjacent pairs are uncovered
}
