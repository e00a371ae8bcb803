#ifndef CENTREX_PROBLEM_HPP_
#define CENTREX_PROBLEM_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "centrex/common.hpp"
#include "centrex/coverage.hpp"
#include "centrex/graph.hpp"

namespace centrex {

// Candidate-set regimes. s1/s0 are undirected; the directed analogues allow
// either orientation (s4) or arbitrary absent arcs (s3).
enum class Setting {
    s1,          // undirected, every candidate touches a target
    s0,          // undirected, arbitrary absent pairs
    s4_directed, // directed, target-incident, either orientation
    s3_directed, // directed, arbitrary absent arcs
};

inline const char *to_string(Setting s) {
    switch (s) {
    case Setting::s1:
        return "s1";
    case Setting::s0:
        return "s0";
    case Setting::s4_directed:
        return "s4-directed";
    case Setting::s3_directed:
        return "s3-directed";
    }
    return "?";
}

inline std::optional<Setting> parse_setting(const std::string &name) {
    if (name == "s1")
        return Setting::s1;
    if (name == "s0")
        return Setting::s0;
    if (name == "s4-directed" || name == "s4")
        return Setting::s4_directed;
    if (name == "s3-directed" || name == "s3")
        return Setting::s3_directed;
    return std::nullopt;
}

inline bool target_incident_setting(Setting s) {
    return s == Setting::s1 || s == Setting::s4_directed;
}

inline bool directed_setting(Setting s) {
    return s == Setting::s4_directed || s == Setting::s3_directed;
}

struct ProblemInstance {
    Graph graph;
    std::vector<std::string> tokens; // id -> external name; empty => decimal ids
    std::vector<NodeId> targets;     // sorted, unique
    std::vector<Edge> candidates;    // ordered: the index is the tie-break key
    PairUniverse universe;
    int budget = 1;
    Setting setting = Setting::s1;
    // Advisory: when set, the caller asserts that each pair can only be
    // covered through one single added edge, so the greedy guarantees apply.
    // The oracle can check this exhaustively on small instances.
    bool assume_unique_edge_coverage = false;

    std::string token_of(NodeId v) const {
        return v < tokens.size() ? tokens[v] : std::to_string(v);
    }

    std::vector<char> target_mask() const { return make_mask(graph.node_count(), targets); }
};

// All absent edges admitted by the setting, sorted by endpoint ids
// (undirected edges normalized min-id-first).
inline std::vector<Edge> build_candidates(const Graph &g, const std::vector<NodeId> &targets,
                                          Setting setting) {
    const auto mask = make_mask(g.node_count(), targets);
    std::vector<Edge> out;

    auto absent = [&](NodeId u, NodeId v) { return u != v && !g.has_edge(u, v); };

    switch (setting) {
    case Setting::s1:
        for (NodeId x : targets)
            for (NodeId v = 0; v < g.node_count(); ++v)
                if (!mask[v] && absent(x, v))
                    out.push_back({std::min(x, v), std::max(x, v)});
        break;
    case Setting::s0:
        for (NodeId u = 0; u < g.node_count(); ++u)
            for (NodeId v = u + 1; v < g.node_count(); ++v)
                if (absent(u, v))
                    out.push_back({u, v});
        break;
    case Setting::s4_directed:
        for (NodeId x : targets)
            for (NodeId v = 0; v < g.node_count(); ++v)
                if (!mask[v]) {
                    if (absent(x, v))
                        out.push_back({x, v});
                    if (absent(v, x))
                        out.push_back({v, x});
                }
        break;
    case Setting::s3_directed:
        for (NodeId u = 0; u < g.node_count(); ++u)
            for (NodeId v = 0; v < g.node_count(); ++v)
                if (absent(u, v))
                    out.push_back({u, v});
        break;
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty())
        throw ValidationError({"no candidate edges: every admissible edge is already present"});
    return out;
}

// Checks every instance invariant and returns all violations (empty = ok).
inline std::vector<std::string> validate(const ProblemInstance &p) {
    std::vector<std::string> issues;
    const NodeId n = p.graph.node_count();

    if (p.targets.empty())
        issues.push_back("target set is empty");
    if (p.targets.size() >= n)
        issues.push_back("target set must be a proper subset of the nodes");
    for (NodeId x : p.targets)
        if (x >= n)
            issues.push_back("target " + p.token_of(x) + " out of range");
    if (!std::is_sorted(p.targets.begin(), p.targets.end()) ||
        std::adjacent_find(p.targets.begin(), p.targets.end()) != p.targets.end())
        issues.push_back("targets must be sorted and unique");

    if (directed_setting(p.setting) != p.graph.directed())
        issues.push_back(std::string("setting ") + to_string(p.setting) + " does not match graph directedness");

    const auto mask = p.target_mask();
    std::vector<Edge> seen;
    for (std::size_t i = 0; i < p.candidates.size(); ++i) {
        const Edge e = p.candidates[i];
        const std::string label = "candidate " + std::to_string(i) + " (" + p.token_of(e.u) + "," +
                                  p.token_of(e.v) + ")";
        if (e.u >= n || e.v >= n) {
            issues.push_back(label + ": endpoint out of range");
            continue;
        }
        if (e.u == e.v)
            issues.push_back(label + ": self-loop");
        if (p.graph.has_edge(e.u, e.v))
            issues.push_back(label + ": already present in the graph");
        if (target_incident_setting(p.setting) && !mask[e.u] && !mask[e.v])
            issues.push_back(label + ": no endpoint in the target set");
        seen.push_back(p.graph.directed() ? e : Edge{std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        issues.push_back("duplicate candidate edges");

    if (p.budget < 1)
        issues.push_back("budget must be at least 1");
    if (static_cast<std::size_t>(p.budget) > p.candidates.size())
        issues.push_back("budget exceeds the number of candidates");

    if (!p.universe.all_pairs) {
        for (const auto &[s, t] : p.universe.pairs) {
            if (s >= n || t >= n) {
                issues.push_back("pair (" + p.token_of(s) + "," + p.token_of(t) + ") out of range");
                continue;
            }
            if (s == t)
                issues.push_back("pair (" + p.token_of(s) + "," + p.token_of(t) + ") is degenerate");
            if (mask[s] || mask[t])
                issues.push_back("pair (" + p.token_of(s) + "," + p.token_of(t) + ") touches the target set");
        }
    }
    return issues;
}

inline void validate_or_throw(const ProblemInstance &p) {
    auto issues = validate(p);
    if (!issues.empty())
        throw ValidationError(std::move(issues));
}

// One greedy round: which edge was committed and what it was worth.
struct IterationRecord {
    int iteration = 0; // 1-based
    std::size_t candidate_index = 0;
    Edge edge;
    std::int64_t gain = 0;    // exact count, or sampled count for sampled algorithms
    bool sampled = false;     // labels the gain column
    double scaled_gain = 0;   // sampled gain scaled by m_u / q (sampled algorithms only)
    bool heuristic = false;   // pick made without a certified score
};

// What every optimizer and baseline returns. coverage_after is always an
// exact recomputation on the final graph, never a sum of (possibly sampled)
// per-iteration gains.
struct SelectionReport {
    std::string algorithm;
    std::vector<std::size_t> selected_indices;
    std::vector<Edge> selected_edges;
    std::vector<IterationRecord> iterations;
    CoverageState coverage_before;
    CoverageState coverage_after;
    std::uint64_t seed = 0;
    std::size_t sample_count = 0; // q, sampled algorithms only
    std::uint64_t sample_draws = 0;
    double uncovered_count_used = 0; // m_u used for scaling, if any
    std::string uncovered_count_source;
    std::vector<std::string> warnings;
    std::map<std::string, double> timings_ms; // informational; excluded from serialized reports by default

    std::int64_t exact_gain() const {
        return static_cast<std::int64_t>(coverage_after.covered) -
               static_cast<std::int64_t>(coverage_before.covered);
    }
};

} // namespace centrex

#endif // CENTREX_PROBLEM_HPP_
