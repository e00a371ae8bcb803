#ifndef CENTREX_GRAPH_HPP_
#define CENTREX_GRAPH_HPP_

#include <algorithm>
#include <istream>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "centrex/common.hpp"

namespace centrex {

namespace detail {

// Presence key: orientation-sensitive when directed, min-id-first otherwise.
inline std::uint64_t edge_key(NodeId u, NodeId v, bool directed) {
    if (!directed && u > v)
        std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

} // namespace detail

inline std::vector<char> make_mask(NodeId n, const std::vector<NodeId> &ids) {
    std::vector<char> mask(n, 0);
    for (NodeId v : ids)
        mask[v] = 1;
    return mask;
}

inline std::vector<NodeId> nodes_outside(NodeId n, const std::vector<char> &mask) {
    std::vector<NodeId> out;
    out.reserve(n);
    for (NodeId v = 0; v < n; ++v)
        if (!mask[v])
            out.push_back(v);
    return out;
}

struct EdgeStats {
    std::size_t duplicates = 0;
    std::size_t self_loops = 0;
};

// Immutable unweighted graph over dense node ids 0..n-1. Undirected edges are
// stored symmetrically; adjacency lists are sorted by neighbor id so that
// iteration order never depends on input order.
class Graph {
public:
    Graph() = default;

    Graph(NodeId node_count, bool directed, std::span<const Edge> edges, EdgeStats *stats = nullptr)
        : directed_(directed), adj_(node_count), radj_(directed ? node_count : 0) {
        edges_.reserve(edges.size() * 2);
        for (const Edge &e : edges) {
            if (e.u == e.v) {
                if (stats)
                    ++stats->self_loops;
                continue;
            }
            if (!insert_edge(e.u, e.v) && stats)
                ++stats->duplicates;
        }
        sort_adjacency();
    }

    NodeId node_count() const { return static_cast<NodeId>(adj_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    bool directed() const { return directed_; }

    // Out-neighbors when directed.
    const std::vector<NodeId> &neighbors(NodeId u) const { return adj_[u]; }

    // In-neighbors; identical to neighbors() for undirected graphs.
    const std::vector<NodeId> &in_neighbors(NodeId u) const { return directed_ ? radj_[u] : adj_[u]; }

    // Orientation-sensitive for directed graphs.
    bool has_edge(NodeId u, NodeId v) const {
        return edges_.count(detail::edge_key(u, v, directed_)) != 0;
    }

    // Copy with extra edges. Duplicates of existing edges are ignored;
    // self-loops are rejected.
    Graph with_edges(std::span<const Edge> added) const {
        Graph out = *this;
        for (const Edge &e : added) {
            if (e.u == e.v)
                throw ValidationError({"self-loop (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                       ") cannot be added"});
            if (e.u >= node_count() || e.v >= node_count())
                throw ValidationError({"edge endpoint out of range"});
            out.insert_edge(e.u, e.v);
        }
        out.sort_adjacency();
        return out;
    }

    Graph with_edge(Edge e) const { return with_edges(std::span<const Edge>(&e, 1)); }

    // Normalized edge list (min-id-first when undirected), sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (NodeId u = 0; u < node_count(); ++u)
            for (NodeId v : adj_[u])
                if (directed_ || u < v)
                    out.push_back({u, v});
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<NodeId> degrees() const {
        std::vector<NodeId> out(node_count());
        for (NodeId u = 0; u < node_count(); ++u)
            out[u] = static_cast<NodeId>(adj_[u].size() + (directed_ ? radj_[u].size() : 0));
        return out;
    }

    friend bool operator==(const Graph &a, const Graph &b) {
        return a.directed_ == b.directed_ && a.adj_ == b.adj_;
    }

private:
    bool insert_edge(NodeId u, NodeId v) {
        if (!edges_.insert(detail::edge_key(u, v, directed_)).second)
            return false;
        adj_[u].push_back(v);
        if (directed_)
            radj_[v].push_back(u);
        else
            adj_[v].push_back(u);
        ++edge_count_;
        return true;
    }

    void sort_adjacency() {
        for (auto &nbrs : adj_)
            std::sort(nbrs.begin(), nbrs.end());
        for (auto &nbrs : radj_)
            std::sort(nbrs.begin(), nbrs.end());
    }

    bool directed_ = false;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<NodeId>> adj_;
    std::vector<std::vector<NodeId>> radj_;
    std::unordered_set<std::uint64_t> edges_;
};

// Single-source hop distances; unreachable nodes stay at kUnreachable.
struct DistanceField {
    NodeId source = 0;
    std::vector<Distance> dist;

    Distance operator[](NodeId v) const { return dist[v]; }
};

// BFS from source. With reversed set on a directed graph the field holds
// distances *to* source, i.e. d(v, source); on undirected graphs reversed is
// a no-op.
inline DistanceField bfs(const Graph &g, NodeId source, bool reversed = false) {
    DistanceField field;
    field.source = source;
    field.dist.assign(g.node_count(), kUnreachable);
    field.dist[source] = 0;
    std::vector<NodeId> frontier{source};
    std::vector<NodeId> next;
    while (!frontier.empty()) {
        next.clear();
        for (NodeId u : frontier) {
            const Distance du = field.dist[u];
            const auto &nbrs = reversed ? g.in_neighbors(u) : g.neighbors(u);
            for (NodeId v : nbrs) {
                if (field.dist[v] == kUnreachable) {
                    field.dist[v] = du + 1;
                    next.push_back(v);
                }
            }
        }
        frontier.swap(next);
    }
    return field;
}

// Dense n-by-n hop distance matrix from n BFS runs. at(s, t) = d(s, t) in
// both orientations' sense for directed graphs; symmetric when undirected.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph &g) : n_(g.node_count()), data_(std::size_t(n_) * n_) {
        for (NodeId s = 0; s < n_; ++s) {
            const DistanceField field = bfs(g, s);
            std::copy(field.dist.begin(), field.dist.end(), data_.begin() + std::size_t(s) * n_);
        }
    }

    NodeId size() const { return n_; }
    Distance at(NodeId s, NodeId t) const { return data_[std::size_t(s) * n_ + t]; }
    const Distance *row(NodeId s) const { return data_.data() + std::size_t(s) * n_; }

private:
    NodeId n_;
    std::vector<Distance> data_;
};

struct LoadResult {
    Graph graph;
    std::vector<std::string> tokens;                   // id -> original token
    std::unordered_map<std::string, NodeId> token_ids; // original token -> id
    EdgeStats dropped;
};

// Whitespace-separated edge list, one edge per line, '#' starts a comment.
// Tokens are remapped to dense ids in first-seen order; duplicate edges and
// self-loops are dropped and counted.
inline LoadResult load_edge_list(std::istream &in, bool directed) {
    LoadResult out;
    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;

    auto intern = [&out](const std::string &token) {
        auto [it, inserted] = out.token_ids.try_emplace(token, static_cast<NodeId>(out.tokens.size()));
        if (inserted)
            out.tokens.push_back(token);
        return it->second;
    };

    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        std::istringstream fields(line);
        std::string a, b;
        if (!(fields >> a))
            continue; // blank or comment-only line
        if (!(fields >> b))
            throw ParseError("line " + std::to_string(line_no) + ": expected two endpoint tokens, got one");
        edges.push_back({intern(a), intern(b)});
    }
    if (out.tokens.empty())
        throw ParseError("empty graph: no edges found");

    out.graph = Graph(static_cast<NodeId>(out.tokens.size()), directed, edges, &out.dropped);
    return out;
}

inline LoadResult load_edge_list(const std::string &text, bool directed) {
    std::istringstream in(text);
    return load_edge_list(in, directed);
}

} // namespace centrex

#endif // CENTREX_GRAPH_HPP_
