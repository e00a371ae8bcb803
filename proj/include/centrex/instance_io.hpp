#ifndef CENTREX_INSTANCE_IO_HPP_
#define CENTREX_INSTANCE_IO_HPP_

#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "centrex/common.hpp"
#include "centrex/graph.hpp"
#include "centrex/problem.hpp"

namespace centrex {

// A frozen non-submodularity witness: candidate indices of the two nested
// edge sets and the edge whose marginal gain grows.
struct WitnessIndices {
    std::vector<std::size_t> base;
    std::vector<std::size_t> super;
    std::size_t extra = 0;
};

struct ParsedInstance {
    ProblemInstance instance;
    std::optional<WitnessIndices> witness;
};

inline constexpr const char *kInstanceSchema = "centrex-instance/1";

// Self-contained single-file instance: header key/values, then sections for
// nodes, edges, targets, candidates, pairs, and an optional witness. '#'
// starts a comment anywhere; tokens are whitespace-separated.
inline std::string serialize_instance(const ProblemInstance &p,
                                      const WitnessIndices *witness = nullptr) {
    std::ostringstream out;
    out << kInstanceSchema << "\n";
    out << "directed " << (p.graph.directed() ? 1 : 0) << "\n";
    out << "k " << p.budget << "\n";
    out << "setting " << to_string(p.setting) << "\n";
    if (p.assume_unique_edge_coverage)
        out << "assume-unique-edge-coverage 1\n";

    out << "[nodes]\n";
    for (NodeId v = 0; v < p.graph.node_count(); ++v)
        out << p.token_of(v) << (v + 1 == p.graph.node_count() ? "\n" : " ");

    out << "[graph]\n";
    for (const Edge &e : p.graph.edges())
        out << p.token_of(e.u) << " " << p.token_of(e.v) << "\n";

    out << "[targets]\n";
    for (std::size_t i = 0; i < p.targets.size(); ++i)
        out << p.token_of(p.targets[i]) << (i + 1 == p.targets.size() ? "\n" : " ");

    out << "[candidates]\n";
    for (const Edge &e : p.candidates)
        out << p.token_of(e.u) << " " << p.token_of(e.v) << "\n";

    out << "[pairs]\n";
    if (p.universe.all_pairs) {
        out << "all\n";
    } else {
        for (const auto &[s, t] : p.universe.pairs)
            out << p.token_of(s) << " " << p.token_of(t) << "\n";
    }

    if (witness) {
        out << "[witness]\n";
        out << "base";
        for (std::size_t i : witness->base)
            out << " " << i;
        out << "\nsuper";
        for (std::size_t i : witness->super)
            out << " " << i;
        out << "\nextra " << witness->extra << "\n";
    }
    return out.str();
}

inline ParsedInstance parse_instance(std::istream &in) {
    std::map<std::string, std::vector<std::string>> sections;
    std::map<std::string, std::string> header;
    std::string current_section;
    std::string line;
    std::size_t line_no = 0;
    bool saw_schema = false;

    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        std::istringstream probe(line);
        std::string first;
        if (!(probe >> first))
            continue;
        if (!saw_schema) {
            if (first != kInstanceSchema)
                throw ParseError("line " + std::to_string(line_no) + ": expected header '" +
                                 kInstanceSchema + "'");
            saw_schema = true;
            continue;
        }
        if (first.front() == '[') {
            if (first.back() != ']')
                throw ParseError("line " + std::to_string(line_no) + ": malformed section name");
            current_section = first.substr(1, first.size() - 2);
            sections[current_section]; // section may stay empty
            continue;
        }
        if (current_section.empty()) {
            std::string value;
            std::getline(probe >> std::ws, value);
            while (!value.empty() && (value.back() == ' ' || value.back() == '\t' || value.back() == '\r'))
                value.pop_back();
            header[first] = value;
            continue;
        }
        std::istringstream whole(line);
        std::string token;
        std::string rebuilt;
        while (whole >> token)
            rebuilt += rebuilt.empty() ? token : " " + token;
        sections[current_section].push_back(rebuilt);
    }
    if (!saw_schema)
        throw ParseError("missing instance header");

    auto header_value = [&](const std::string &key, const std::string &fallback) {
        const auto it = header.find(key);
        return it == header.end() ? fallback : it->second;
    };

    ParsedInstance out;
    ProblemInstance &p = out.instance;
    const bool directed = header_value("directed", "0") == "1";

    const auto setting = parse_setting(header_value("setting", directed ? "s4-directed" : "s1"));
    if (!setting)
        throw ParseError("unknown setting '" + header_value("setting", "") + "'");
    p.setting = *setting;
    p.budget = std::stoi(header_value("k", "1"));
    p.assume_unique_edge_coverage = header_value("assume-unique-edge-coverage", "0") == "1";

    // Node table: declared explicitly, or first-seen over graph edges.
    std::unordered_map<std::string, NodeId> ids;
    const bool declared_nodes = sections.count("nodes") != 0;
    auto intern = [&](const std::string &token, bool allow_new) {
        auto it = ids.find(token);
        if (it != ids.end())
            return it->second;
        if (!allow_new)
            throw ParseError("unknown node token '" + token + "'");
        const NodeId id = static_cast<NodeId>(p.tokens.size());
        ids.emplace(token, id);
        p.tokens.push_back(token);
        return id;
    };
    if (declared_nodes) {
        for (const std::string &row : sections["nodes"]) {
            std::istringstream fields(row);
            std::string token;
            while (fields >> token)
                intern(token, true);
        }
    }

    auto parse_pair = [&](const std::string &row, const char *what) {
        std::istringstream fields(row);
        std::string a, b;
        if (!(fields >> a >> b))
            throw ParseError(std::string(what) + " line needs two tokens: '" + row + "'");
        return std::pair<NodeId, NodeId>{intern(a, !declared_nodes), intern(b, !declared_nodes)};
    };

    if (!sections.count("graph"))
        throw ParseError("missing [graph] section");
    std::vector<Edge> edges;
    for (const std::string &row : sections["graph"]) {
        const auto [u, v] = parse_pair(row, "graph");
        edges.push_back({u, v});
    }
    p.graph = Graph(static_cast<NodeId>(p.tokens.size()), directed, edges);

    if (!sections.count("targets"))
        throw ParseError("missing [targets] section");
    for (const std::string &row : sections["targets"]) {
        std::istringstream fields(row);
        std::string token;
        while (fields >> token)
            p.targets.push_back(intern(token, false));
    }
    std::sort(p.targets.begin(), p.targets.end());
    p.targets.erase(std::unique(p.targets.begin(), p.targets.end()), p.targets.end());

    if (!sections.count("candidates"))
        throw ParseError("missing [candidates] section");
    const auto &candidate_rows = sections["candidates"];
    if (candidate_rows.size() == 1 &&
        (candidate_rows[0].rfind("auto", 0) == 0)) {
        std::string mode = candidate_rows[0];
        for (char &c : mode)
            if (c == ':')
                c = ' ';
        std::istringstream fields(mode);
        std::string kw, name;
        fields >> kw >> name;
        const auto auto_setting = parse_setting(name);
        if (!auto_setting)
            throw ParseError("unknown candidate mode '" + candidate_rows[0] + "'");
        p.setting = *auto_setting;
        p.candidates = build_candidates(p.graph, p.targets, p.setting);
    } else {
        for (const std::string &row : candidate_rows) {
            auto [u, v] = parse_pair(row, "candidate");
            if (!directed && u > v)
                std::swap(u, v);
            p.candidates.push_back({u, v});
        }
    }

    if (sections.count("pairs")) {
        const auto &pair_rows = sections["pairs"];
        if (pair_rows.size() == 1 && (pair_rows[0].rfind("file ", 0) == 0 ||
                                      pair_rows[0].rfind("file:", 0) == 0)) {
            // Reference to an external pair file instead of inline pairs.
            const std::string path = pair_rows[0].substr(5);
            std::ifstream pair_in(path);
            if (!pair_in.good())
                throw ParseError("cannot open pair file '" + path + "'");
            std::unordered_map<std::string, NodeId> token_ids;
            for (NodeId v = 0; v < p.graph.node_count(); ++v)
                token_ids.emplace(p.token_of(v), v);
            std::vector<std::pair<NodeId, NodeId>> pairs;
            std::string pair_line;
            std::size_t pair_line_no = 0;
            while (std::getline(pair_in, pair_line)) {
                ++pair_line_no;
                const auto pos = pair_line.find('#');
                if (pos != std::string::npos)
                    pair_line.resize(pos);
                std::istringstream fields(pair_line);
                std::string a, b;
                if (!(fields >> a))
                    continue;
                if (!(fields >> b))
                    throw ParseError("pair file line " + std::to_string(pair_line_no) +
                                     ": expected two node tokens");
                const auto ia = token_ids.find(a);
                const auto ib = token_ids.find(b);
                if (ia == token_ids.end() || ib == token_ids.end())
                    throw ParseError("pair file line " + std::to_string(pair_line_no) +
                                     ": unknown node token");
                pairs.emplace_back(ia->second, ib->second);
            }
            p.universe = PairUniverse::explicit_pairs(std::move(pairs));
        } else if (!(pair_rows.size() == 1 && pair_rows[0] == "all")) {
            std::vector<std::pair<NodeId, NodeId>> pairs;
            for (const std::string &row : pair_rows)
                pairs.push_back(parse_pair(row, "pair"));
            p.universe = PairUniverse::explicit_pairs(std::move(pairs));
        }
    }

    if (sections.count("witness")) {
        WitnessIndices w;
        bool saw_extra = false;
        for (const std::string &row : sections["witness"]) {
            std::istringstream fields(row);
            std::string kw;
            fields >> kw;
            if (kw == "base" || kw == "super") {
                std::size_t idx;
                auto &list = kw == "base" ? w.base : w.super;
                while (fields >> idx)
                    list.push_back(idx);
            } else if (kw == "extra") {
                if (!(fields >> w.extra))
                    throw ParseError("witness extra line needs an index");
                saw_extra = true;
            } else {
                throw ParseError("unknown witness row '" + row + "'");
            }
        }
        if (!saw_extra)
            throw ParseError("witness section missing the extra edge");
        for (std::size_t i : w.base)
            if (i >= p.candidates.size())
                throw ParseError("witness base index out of range");
        for (std::size_t i : w.super)
            if (i >= p.candidates.size())
                throw ParseError("witness super index out of range");
        if (w.extra >= p.candidates.size())
            throw ParseError("witness extra index out of range");
        out.witness = std::move(w);
    }
    return out;
}

inline ParsedInstance parse_instance(const std::string &text) {
    std::istringstream in(text);
    return parse_instance(in);
}

// The explicit pair-universe file: one pair of node tokens per line,
// resolved against an already-loaded graph's token table.
inline PairUniverse load_pair_file(std::istream &in,
                                   const std::unordered_map<std::string, NodeId> &token_ids) {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        std::istringstream fields(line);
        std::string a, b;
        if (!(fields >> a))
            continue;
        if (!(fields >> b))
            throw ParseError("line " + std::to_string(line_no) + ": expected two node tokens");
        const auto ia = token_ids.find(a);
        const auto ib = token_ids.find(b);
        if (ia == token_ids.end() || ib == token_ids.end())
            throw ParseError("line " + std::to_string(line_no) + ": unknown node token");
        pairs.emplace_back(ia->second, ib->second);
    }
    return PairUniverse::explicit_pairs(std::move(pairs));
}

} // namespace centrex

#endif // CENTREX_INSTANCE_IO_HPP_
