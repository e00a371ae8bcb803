#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

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

Graph star_graph(NodeId leaves) {
    std::vector<Edge> edges;
    for (NodeId v = 1; v <= leaves; ++v)
        edges.push_back({0, v});
    return Graph(leaves + 1, false, edges);
}

} // namespace

TEST_CASE("edge list loading maps tokens in first-seen order") {
    const auto loaded = load_edge_list("0 1\n1 2\n", false);
    CHECK(loaded.graph.node_count() == 3);
    CHECK(loaded.graph.edge_count() == 2);
    CHECK(loaded.tokens == std::vector<std::string>{"0", "1", "2"});
    CHECK(loaded.graph.has_edge(0, 1));
    CHECK(loaded.graph.has_edge(1, 0)); // undirected symmetry
}

TEST_CASE("duplicate edges and self-loops are dropped and counted") {
    const auto loaded = load_edge_list("a b\nb a\na a\n", false);
    CHECK(loaded.graph.node_count() == 2);
    CHECK(loaded.graph.edge_count() == 1);
    CHECK(loaded.dropped.duplicates == 1);
    CHECK(loaded.dropped.self_loops == 1);
}

TEST_CASE("directed loading keeps both orientations") {
    const auto loaded = load_edge_list("0 1\n1 0\n", true);
    CHECK(loaded.graph.node_count() == 2);
    CHECK(loaded.graph.edge_count() == 2);
    CHECK(loaded.graph.has_edge(0, 1));
    CHECK(loaded.graph.has_edge(1, 0));
}

TEST_CASE("loader rejects malformed and empty input") {
    CHECK_THROWS_AS(load_edge_list("0 1\n2\n", false), ParseError);
    CHECK_THROWS_AS(load_edge_list("# only comments\n\n", false), ParseError);
    try {
        load_edge_list("0 1\nlonely\n", false);
        FAIL("expected parse error");
    } catch (const ParseError &e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("comments and blank lines are skipped") {
    const auto loaded = load_edge_list("# header\n0 1 # trailing\n\n1 2\n", false);
    CHECK(loaded.graph.node_count() == 3);
    CHECK(loaded.graph.edge_count() == 2);
}

TEST_CASE("bfs on a path") {
    const Graph g = path_graph(5);
    const DistanceField field = bfs(g, 2);
    CHECK(field.dist == std::vector<Distance>{2, 1, 0, 1, 2});
}

TEST_CASE("bfs on a star from a leaf") {
    const Graph g = star_graph(5);
    const DistanceField field = bfs(g, 1);
    CHECK(field.dist[0] == 1);
    CHECK(field.dist[1] == 0);
    for (NodeId leaf = 2; leaf <= 5; ++leaf)
        CHECK(field.dist[leaf] == 2);
}

TEST_CASE("bfs marks disconnected nodes unreachable") {
    const Graph g(4, false, std::vector<Edge>{{0, 1}, {2, 3}});
    const DistanceField field = bfs(g, 0);
    CHECK(field.dist[1] == 1);
    CHECK(field.dist[2] == kUnreachable);
    CHECK(field.dist[3] == kUnreachable);
}

TEST_CASE("reverse bfs gives distances toward the source") {
    const Graph g(3, true, std::vector<Edge>{{0, 1}, {1, 2}});
    const DistanceField forward = bfs(g, 0);
    CHECK(forward.dist == std::vector<Distance>{0, 1, 2});
    const DistanceField reverse = bfs(g, 2, /*reversed=*/true);
    CHECK(reverse.dist == std::vector<Distance>{2, 1, 0});
    CHECK(bfs(g, 2).dist[0] == kUnreachable);
}

TEST_CASE("with_edges copies and leaves the original intact") {
    const Graph p4 = path_graph(4);
    const Graph cycle = p4.with_edge({0, 3});
    CHECK(p4.edge_count() == 3);
    CHECK(cycle.edge_count() == 4);
    CHECK(cycle.has_edge(3, 0));

    const Graph same = p4.with_edge({1, 2});
    CHECK(same == p4);

    const std::vector<Edge> twice{{0, 2}, {0, 2}};
    CHECK(p4.with_edges(twice).edge_count() == 4);

    CHECK_THROWS_AS(p4.with_edge({1, 1}), ValidationError);
}

TEST_CASE("hop arithmetic saturates at the sentinel") {
    CHECK(hop_add(kUnreachable, 1) == kUnreachable);
    CHECK(hop_add(3, kUnreachable) == kUnreachable);
    CHECK(hop_add(kUnreachable, 1, kUnreachable) == kUnreachable);
    CHECK(hop_add(2, 1, 3) == 6);
}

TEST_CASE("bfs distances obey the triangle inequality on random graphs") {
    Rng rng(20260808);
    for (int trial = 0; trial < 20; ++trial) {
        Rng r = rng.split(trial);
        const NodeId n = static_cast<NodeId>(6 + r.below(20));
        const Graph g = gnp(n, 0.2 + 0.3 * r.next_double(), false, r);
        const DistanceMatrix d(g);
        for (int probe = 0; probe < 200; ++probe) {
            const NodeId s = static_cast<NodeId>(r.below(n));
            const NodeId t = static_cast<NodeId>(r.below(n));
            const NodeId v = static_cast<NodeId>(r.below(n));
            CHECK(d.at(s, t) <= hop_add(d.at(s, v), d.at(v, t)));
        }
    }
}

TEST_CASE("adding edges never increases any pairwise distance") {
    Rng rng(7);
    for (int trial = 0; trial < 15; ++trial) {
        Rng r = rng.split(trial);
        const NodeId n = static_cast<NodeId>(8 + r.below(43)); // up to 50
        const Graph g = gnp(n, 0.1 + 0.2 * r.next_double(), false, r);
        std::vector<Edge> extra;
        for (int i = 0; i < 4; ++i) {
            const NodeId u = static_cast<NodeId>(r.below(n));
            const NodeId v = static_cast<NodeId>(r.below(n));
            if (u != v)
                extra.push_back({u, v});
        }
        if (extra.empty())
            continue;
        const Graph bigger = g.with_edges(extra);
        const DistanceMatrix before(g);
        const DistanceMatrix after(bigger);
        for (NodeId s = 0; s < n; ++s)
            for (NodeId t = 0; t < n; ++t)
                CHECK(after.at(s, t) <= before.at(s, t));
    }
}

TEST_CASE("bfs levels differ by at most one across any edge") {
    Rng rng(606);
    for (int trial = 0; trial < 15; ++trial) {
        Rng r = rng.split(trial);
        const NodeId n = static_cast<NodeId>(6 + r.below(20));
        const bool directed = trial % 2 == 0;
        const Graph g = gnp(n, 0.2, directed, r);
        for (NodeId source = 0; source < n; ++source) {
            const DistanceField field = bfs(g, source);
            for (NodeId u = 0; u < n; ++u) {
                if (field.dist[u] == kUnreachable)
                    continue;
                for (NodeId v : g.neighbors(u)) {
                    CHECK(field.dist[v] <= field.dist[u] + 1);
                    if (!directed && field.dist[v] != kUnreachable) {
                        const Distance lo = std::min(field.dist[u], field.dist[v]);
                        const Distance hi = std::max(field.dist[u], field.dist[v]);
                        CHECK(hi - lo <= 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("undirected bfs is symmetric") {
    Rng rng(99);
    const Graph g = gnp(25, 0.15, false, rng);
    for (NodeId s = 0; s < 25; ++s) {
        const DistanceField from_s = bfs(g, s);
        for (NodeId t = 0; t < 25; ++t)
            CHECK(from_s.dist[t] == bfs(g, t).dist[s]);
    }
}

TEST_CASE("adjacency lists are sorted regardless of input order") {
    const Graph g(4, false, std::vector<Edge>{{2, 0}, {0, 3}, {1, 0}});
    CHECK(g.neighbors(0) == std::vector<NodeId>{1, 2, 3});
}

TEST_CASE("generators produce the expected shapes") {
    Rng rng(5);
    const Graph ba = barabasi_albert(50, 3, rng);
    CHECK(ba.node_count() == 50);
    CHECK(ba.edge_count() == 3 + 3 * 47);
    const DistanceField field = bfs(ba, 0);
    CHECK(std::count(field.dist.begin(), field.dist.end(), kUnreachable) == 0);

    Rng rng2(6);
    const Graph tree = random_connected(30, 0, rng2);
    CHECK(tree.edge_count() == 29);
}
