#ifndef CENTREX_GENERATORS_HPP_
#define CENTREX_GENERATORS_HPP_

#include <vector>

#include "centrex/common.hpp"
#include "centrex/graph.hpp"
#include "centrex/rng.hpp"

namespace centrex {

// Preferential attachment: a clique on the first `attach` nodes, then every
// new node links to `attach` distinct existing nodes chosen proportionally
// to degree (endpoint-list sampling). Connected by construction, with
// m = C(attach, 2) + attach * (n - attach) edges.
inline Graph barabasi_albert(NodeId n, NodeId attach, Rng &rng) {
    if (attach < 1 || n < attach + 1)
        throw ValidationError({"preferential attachment needs n > attach >= 1"});
    std::vector<Edge> edges;
    std::vector<NodeId> endpoints;
    for (NodeId u = 0; u < attach; ++u)
        for (NodeId v = u + 1; v < attach; ++v) {
            edges.push_back({u, v});
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    if (attach == 1)
        endpoints.push_back(0); // degree-0 seed still needs a slot

    std::vector<NodeId> chosen;
    for (NodeId t = attach; t < n; ++t) {
        chosen.clear();
        while (chosen.size() < attach) {
            const NodeId pick = endpoints[rng.below(endpoints.size())];
            bool dup = false;
            for (NodeId c : chosen)
                dup |= (c == pick);
            if (!dup)
                chosen.push_back(pick);
        }
        for (NodeId c : chosen) {
            edges.push_back({t, c});
            endpoints.push_back(t);
            endpoints.push_back(c);
        }
    }
    return Graph(n, /*directed=*/false, edges);
}

// Erdos-Renyi: every admissible (ordered when directed) pair independently
// with the given probability.
inline Graph gnp(NodeId n, double probability, bool directed, Rng &rng) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = directed ? 0 : u + 1; v < n; ++v)
            if (u != v && rng.chance(probability))
                edges.push_back({u, v});
    return Graph(n, directed, edges);
}

// Random spanning tree plus extra uniformly chosen absent edges; always
// connected and undirected.
inline Graph random_connected(NodeId n, std::size_t extra_edges, Rng &rng) {
    if (n == 0)
        throw ValidationError({"graph needs at least one node"});
    std::vector<Edge> edges;
    for (NodeId v = 1; v < n; ++v)
        edges.push_back({static_cast<NodeId>(rng.below(v)), v});
    Graph g(n, /*directed=*/false, edges);
    const std::size_t possible = static_cast<std::size_t>(n) * (n - 1) / 2 - g.edge_count();
    std::size_t remaining = std::min(extra_edges, possible);
    while (remaining > 0) {
        const NodeId u = static_cast<NodeId>(rng.below(n));
        const NodeId v = static_cast<NodeId>(rng.below(n));
        if (u == v || g.has_edge(u, v))
            continue;
        g = g.with_edge({u, v});
        --remaining;
    }
    return g;
}

} // namespace centrex

#endif // CENTREX_GENERATORS_HPP_
