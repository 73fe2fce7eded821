#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "holefree/error.hpp"
#include "holefree/vertex_set.hpp"
#include "holefree/weight.hpp"

namespace holefree {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected vertex-weighted graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    /// Unit weights.
    Graph(int n, const std::vector<Edge>& edges) : Graph(n, edges, std::vector<Weight>(static_cast<std::size_t>(n), Weight::from_integer(1))) {}

    /// Throws PreconditionViolation on loops, parallel edges, out-of-range
    /// endpoints, or a weight vector of the wrong length.
    Graph(int n, const std::vector<Edge>& edges, std::vector<Weight> weights) : n_(n), weights_(std::move(weights)) {
        if (n < 0) throw PreconditionViolation("negative vertex count");
        if (weights_.size() != static_cast<std::size_t>(n)) throw PreconditionViolation("weight vector length differs from vertex count");
        for (Weight w : weights_)
            if (w < Weight{}) throw PreconditionViolation("negative weight");
        adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionViolation("edge endpoint out of range");
            if (u == v) throw PreconditionViolation("self-loop");
            if (adj_[static_cast<std::size_t>(u)].contains(v)) throw PreconditionViolation("duplicate edge");
            adj_[static_cast<std::size_t>(u)].insert(v);
            adj_[static_cast<std::size_t>(v)].insert(u);
        }
        edge_count_ = edges.size();
    }

    int n() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edge_count_; }
    const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool adjacent(Vertex u, Vertex v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
    int degree(Vertex v) const { return neighbors(v).size(); }
    Weight weight(Vertex v) const { return weights_[static_cast<std::size_t>(v)]; }
    const std::vector<Weight>& weights() const noexcept { return weights_; }

    VertexSet empty_set() const { return VertexSet(n_); }
    VertexSet all() const { return VertexSet::full(n_); }

    /// Edges (u,v) with u < v in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (Vertex u = 0; u < n_; ++u)
            neighbors(u).for_each([&](Vertex v) {
                if (v > u) out.emplace_back(u, v);
            });
        return out;
    }

    Weight total_weight(const VertexSet& s) const {
        Weight t;
        s.for_each([&](Vertex v) { t += weight(v); });
        return t;
    }
    Weight total_weight() const { return total_weight(all()); }

    bool is_independent(const VertexSet& s) const {
        bool ok = true;
        s.for_each([&](Vertex v) { ok = ok && !neighbors(v).intersects(s); });
        return ok;
    }
    bool is_clique(const VertexSet& s) const {
        bool ok = true;
        s.for_each([&](Vertex v) {
            VertexSet rest = s;
            rest.erase(v);
            ok = ok && rest.is_subset_of(neighbors(v));
        });
        return ok;
    }

    /// Same graph with weights replaced.
    Graph with_weights(std::vector<Weight> weights) const { return Graph(n_, edges(), std::move(weights)); }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && adj_ == o.adj_ && weights_ == o.weights_;
    }

private:
    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<Weight> weights_;
};

/// An induced subgraph together with the map from its vertices back to the
/// parent graph. Subgraph vertex i corresponds to parent vertex `to_parent[i]`;
/// the relative order of vertices is preserved unless an explicit order is
/// supplied.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;

    VertexSet lift(const VertexSet& s, int parent_n) const {
        VertexSet out(parent_n);
        s.for_each([&](Vertex v) { out.insert(to_parent[static_cast<std::size_t>(v)]); });
        return out;
    }
};

inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& order) {
    std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < order.size(); ++i) local[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    std::vector<Weight> weights;
    weights.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex u = order[i];
        weights.push_back(g.weight(u));
        g.neighbors(u).for_each([&](Vertex v) {
            int j = local[static_cast<std::size_t>(v)];
            if (j > static_cast<int>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
        });
    }
    return {Graph(static_cast<int>(order.size()), edges, std::move(weights)), order};
}

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    return induced_subgraph(g, keep.to_vector());
}

/// N(X) (open) or N[X] (closed).
inline VertexSet neighborhood(const Graph& g, const VertexSet& x, bool closed = false) {
    VertexSet out(g.n());
    x.for_each([&](Vertex v) { out |= g.neighbors(v); });
    if (closed)
        out |= x;
    else
        out -= x;
    return out;
}

inline VertexSet open_neighborhood(const Graph& g, const VertexSet& x) { return neighborhood(g, x, false); }
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) { return neighborhood(g, x, true); }

/// The component of g[within] containing `seed`.
inline VertexSet component_of(const Graph& g, const VertexSet& within, Vertex seed) {
    VertexSet comp(g.n());
    comp.insert(seed);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
        VertexSet grown(g.n());
        frontier.for_each([&](Vertex v) { grown |= g.neighbors(v); });
        grown &= within;
        grown -= comp;
        comp |= grown;
        frontier = std::move(grown);
    }
    return comp;
}

/// Connected components of g[x], ordered by minimum element.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& x) {
    std::vector<VertexSet> out;
    VertexSet rest = x;
    for (Vertex v = rest.first(); v >= 0; v = rest.first()) {
        out.push_back(component_of(g, rest, v));
        rest -= out.back();
    }
    return out;
}

inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.all()); }

inline bool is_connected(const Graph& g) { return g.n() == 0 || components(g).size() == 1; }

inline Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(g.n(), edges, g.weights());
}

inline int max_degree(const Graph& g) {
    int d = 0;
    for (Vertex v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
    return d;
}

/// Shortest path from `from` to `to` whose vertices all lie in `within`
/// (endpoints included), as a vertex list; empty when none exists. Ties are
/// resolved towards smaller vertex indices.
inline std::vector<Vertex> shortest_path(const Graph& g, const VertexSet& within, Vertex from, Vertex to) {
    std::vector<Vertex> parent(static_cast<std::size_t>(g.n()), -1);
    VertexSet seen(g.n());
    seen.insert(from);
    std::vector<Vertex> queue{from};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        if (u == to) break;
        VertexSet next = g.neighbors(u) & within;
        next -= seen;
        next.for_each([&](Vertex v) {
            seen.insert(v);
            parent[static_cast<std::size_t>(v)] = u;
            queue.push_back(v);
        });
    }
    if (!seen.contains(to)) return {};
    std::vector<Vertex> path;
    for (Vertex v = to; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace holefree
