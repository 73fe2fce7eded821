#pragma once

// Line-oriented graph files:
//
//   # comment
//   p mwis <n> <m>
//   e <u> <v>          (m lines, 1-indexed)
//   w <v> <decimal>    (optional; absent means weight 1)

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "holefree/error.hpp"
#include "holefree/graph.hpp"

namespace holefree {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

inline long long parse_index(const std::string& tok, std::size_t line, const char* what) {
    if (tok.empty() || tok.size() > 10) throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
    for (char c : tok)
        if (c < '0' || c > '9') throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
    return std::stoll(tok);
}

}  // namespace detail

inline Graph parse_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<Edge> edges;
    std::vector<Weight> weights;
    std::vector<bool> weight_seen;
    std::vector<VertexSet> adj;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto tok = detail::split_ws(line);
        if (tok.empty() || tok[0][0] == '#') continue;
        const std::string& kind = tok[0];
        if (kind == "p") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            if (tok.size() != 4 || tok[1] != "mwis") throw ParseError(lineno, "malformed header, expected 'p mwis <n> <m>'");
            n = detail::parse_index(tok[2], lineno, "vertex count");
            m = detail::parse_index(tok[3], lineno, "edge count");
            if (n > 1'000'000) throw ParseError(lineno, "vertex count too large");
            if (m > n * (n - 1) / 2) throw ParseError(lineno, "edge count exceeds n(n-1)/2");
            have_header = true;
            weights.assign(static_cast<std::size_t>(n), Weight::from_integer(1));
            weight_seen.assign(static_cast<std::size_t>(n), false);
            adj.assign(static_cast<std::size_t>(n), VertexSet(static_cast<int>(n)));
        } else if (kind == "e") {
            if (!have_header) throw ParseError(lineno, "edge before header");
            if (tok.size() != 3) throw ParseError(lineno, "malformed edge line");
            long long u = detail::parse_index(tok[1], lineno, "vertex");
            long long v = detail::parse_index(tok[2], lineno, "vertex");
            if (u < 1 || u > n || v < 1 || v > n) throw ParseError(lineno, "vertex index out of range");
            if (u == v) throw ParseError(lineno, "self-loop");
            auto a = static_cast<Vertex>(u - 1), b = static_cast<Vertex>(v - 1);
            if (adj[static_cast<std::size_t>(a)].contains(b)) throw ParseError(lineno, "duplicate edge");
            adj[static_cast<std::size_t>(a)].insert(b);
            adj[static_cast<std::size_t>(b)].insert(a);
            edges.emplace_back(a, b);
        } else if (kind == "w") {
            if (!have_header) throw ParseError(lineno, "weight before header");
            if (tok.size() != 3) throw ParseError(lineno, "malformed weight line");
            long long v = detail::parse_index(tok[1], lineno, "vertex");
            if (v < 1 || v > n) throw ParseError(lineno, "vertex index out of range");
            if (!tok[2].empty() && tok[2][0] == '-') throw ParseError(lineno, "negative weight");
            auto w = Weight::parse(tok[2]);
            if (!w) throw ParseError(lineno, "bad weight '" + tok[2] + "'");
            auto idx = static_cast<std::size_t>(v - 1);
            if (weight_seen[idx]) throw ParseError(lineno, "duplicate weight line");
            weight_seen[idx] = true;
            weights[idx] = *w;
        } else {
            throw ParseError(lineno, "unknown line type '" + kind + "'");
        }
    }
    if (!have_header) throw ParseError(lineno, "missing header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(lineno, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph(static_cast<int>(n), edges, std::move(weights));
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

/// Canonical text: comments, header, non-unit weights, then sorted edges.
inline std::string emit_graph(const Graph& g, const std::vector<std::string>& comments = {}) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << '\n';
    out << "p mwis " << g.n() << ' ' << g.edge_count() << '\n';
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.weight(v) != Weight::from_integer(1)) out << "w " << v + 1 << ' ' << g.weight(v) << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

}  // namespace holefree
