#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>
#include <vector>

#include "holefree/error.hpp"
#include "holefree/graph.hpp"

namespace holefree {

/// Induced cycle of length >= 5, or nullopt when g is long-hole-free.
///
/// Every long hole contains an induced path x1-x2-x3-x4 whose remainder avoids
/// N[x2] ∪ N[x3] apart from x1 and x4. So for each edge x2x3 we look at the
/// components C of g - (N[x2] ∪ N[x3]) and ask whether C attaches to a private
/// neighbour x1 of x2 and a private neighbour x4 of x3 with x1x4 a nonedge. A
/// shortest x4..x1 path through C closes the hole.
inline std::optional<std::vector<Vertex>> find_long_hole(const Graph& g) {
    const int n = g.n();
    for (Vertex x2 = 0; x2 < n; ++x2) {
        VertexSet n2 = g.neighbors(x2);
        n2.insert(x2);
        for (Vertex x3 = g.neighbors(x2).next(x2 + 1); x3 >= 0; x3 = g.neighbors(x2).next(x3 + 1)) {
            VertexSet n3 = g.neighbors(x3);
            n3.insert(x3);
            VertexSet only2 = g.neighbors(x2) - n3;
            VertexSet only3 = g.neighbors(x3) - n2;
            if (only2.empty() || only3.empty()) continue;
            VertexSet rest = ~(n2 | n3);
            for (const VertexSet& c : components(g, rest)) {
                VertexSet attach = open_neighborhood(g, c);
                VertexSet side1 = attach & only2;
                VertexSet side4 = attach & only3;
                for (Vertex x1 = side1.first(); x1 >= 0; x1 = side1.next(x1 + 1)) {
                    VertexSet far = side4 - g.neighbors(x1);
                    if (far.empty()) continue;
                    Vertex x4 = far.first();
                    VertexSet corridor = c;
                    corridor.insert(x1);
                    corridor.insert(x4);
                    auto path = shortest_path(g, corridor, x4, x1);
                    std::vector<Vertex> cycle{x1, x2, x3};
                    cycle.insert(cycle.end(), path.begin(), path.end() - 1);
                    // Verified induced before returning.
                    const auto len = cycle.size();
                    bool ok = len >= 5;
                    for (std::size_t i = 0; ok && i < len; ++i)
                        for (std::size_t j = i + 1; ok && j < len; ++j) {
                            bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
                            ok = g.adjacent(cycle[i], cycle[j]) == consecutive;
                        }
                    if (!ok) throw WitnessNotFound("long-hole search produced a non-induced cycle");
                    return cycle;
                }
            }
        }
    }
    return std::nullopt;
}

/// Induced k-prism: a[i] b[i] are the matching edges.
struct PrismWitness {
    std::vector<Vertex> a;
    std::vector<Vertex> b;

    int k() const { return static_cast<int>(a.size()); }
    VertexSet vertices(int n) const {
        VertexSet s(n);
        for (Vertex v : a) s.insert(v);
        for (Vertex v : b) s.insert(v);
        return s;
    }
};

namespace detail {

struct PrismSearch {
    const Graph& g;
    int k;
    std::vector<Vertex> by_rank;
    std::vector<VertexSet> ranked_after;  // vertices of rank > r
    std::vector<Vertex> a, b;

    PrismSearch(const Graph& graph, int target) : g(graph), k(target) {
        const int n = g.n();
        by_rank.resize(static_cast<std::size_t>(n));
        std::iota(by_rank.begin(), by_rank.end(), 0);
        std::stable_sort(by_rank.begin(), by_rank.end(), [&](Vertex x, Vertex y) { return g.degree(x) > g.degree(y); });
        ranked_after.assign(static_cast<std::size_t>(n) + 1, VertexSet(n));
        for (int r = n - 1; r >= 0; --r) {
            ranked_after[static_cast<std::size_t>(r)] = ranked_after[static_cast<std::size_t>(r) + 1];
            if (r + 1 < n) ranked_after[static_cast<std::size_t>(r)].insert(by_rank[static_cast<std::size_t>(r) + 1]);
        }
    }

    // cand_a: vertices usable as the next a (adjacent to all a's, to no b,
    // ranked after the last a). cand_b: adjacent to all b's, to no a.
    bool extend(const VertexSet& cand_a, const VertexSet& cand_b, int start_rank) {
        const int depth = static_cast<int>(a.size());
        if (depth == k) return true;
        if (cand_a.size() < k - depth || cand_b.size() < k - depth) return false;
        for (int r = start_rank; r < g.n(); ++r) {
            Vertex x = by_rank[static_cast<std::size_t>(r)];
            if (!cand_a.contains(x)) continue;
            VertexSet partners = cand_b & g.neighbors(x);
            for (Vertex y = partners.first(); y >= 0; y = partners.next(y + 1)) {
                VertexSet next_a = cand_a & g.neighbors(x) & ranked_after[static_cast<std::size_t>(r)];
                next_a -= g.neighbors(y);
                next_a.erase(y);
                VertexSet next_b = cand_b & g.neighbors(y);
                next_b -= g.neighbors(x);
                next_b.erase(x);
                a.push_back(x);
                b.push_back(y);
                if (extend(next_a, next_b, r + 1)) return true;
                a.pop_back();
                b.pop_back();
            }
        }
        return false;
    }
};

}  // namespace detail

/// Exact search for an induced k-prism (k >= 1).
inline std::optional<PrismWitness> find_k_prism(const Graph& g, int k) {
    if (k < 1) throw PreconditionViolation("prism size must be at least 1");
    if (2 * k > g.n()) return std::nullopt;
    detail::PrismSearch search(g, k);
    if (!search.extend(g.all(), g.all(), 0)) return std::nullopt;
    return PrismWitness{search.a, search.b};
}

/// Largest k such that g contains an induced k-prism, scanning up to max_k
/// (0 = no limit). Returns 0 for edgeless graphs.
inline int largest_prism(const Graph& g, int max_k = 0) {
    int best = 0;
    for (int k = 1; max_k == 0 || k <= max_k; ++k) {
        if (!find_k_prism(g, k)) break;
        best = k;
    }
    return best;
}

inline bool is_valid_prism(const Graph& g, const PrismWitness& p) {
    const int k = p.k();
    if (static_cast<int>(p.b.size()) != k || k < 1) return false;
    if (p.vertices(g.n()).size() != 2 * k) return false;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            auto ai = p.a[static_cast<std::size_t>(i)], aj = p.a[static_cast<std::size_t>(j)];
            auto bi = p.b[static_cast<std::size_t>(i)], bj = p.b[static_cast<std::size_t>(j)];
            if (i != j && (!g.adjacent(ai, aj) || !g.adjacent(bi, bj) || g.adjacent(ai, bj))) return false;
            if (i == j && !g.adjacent(ai, bi)) return false;
        }
    return true;
}

struct ChordalityResult {
    bool chordal = false;
    /// Perfect elimination order when chordal.
    std::vector<Vertex> elimination_order;
    /// A hole (induced cycle of length >= 4) when not chordal.
    std::vector<Vertex> hole;
};

/// Maximum cardinality search visit order; ties go to the smallest index.
inline std::vector<Vertex> mcs_order(const Graph& g) {
    const int n = g.n();
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!done[static_cast<std::size_t>(v)] && (best < 0 || count[static_cast<std::size_t>(v)] > count[static_cast<std::size_t>(best)])) best = v;
        done[static_cast<std::size_t>(best)] = true;
        order.push_back(best);
        g.neighbors(best).for_each([&](Vertex u) { ++count[static_cast<std::size_t>(u)]; });
    }
    return order;
}

/// Whether `order` is a perfect elimination order of g.
inline bool is_perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
    VertexSet later = g.all();
    for (Vertex v : order) {
        later.erase(v);
        VertexSet higher = g.neighbors(v) & later;
        if (!g.is_clique(higher)) return false;
    }
    return true;
}

/// Some hole of g (length >= 4), or empty when g is chordal.
inline std::vector<Vertex> find_hole(const Graph& g) {
    for (Vertex v = 0; v < g.n(); ++v) {
        const VertexSet& nv = g.neighbors(v);
        for (Vertex u = nv.first(); u >= 0; u = nv.next(u + 1))
            for (Vertex w = nv.next(u + 1); w >= 0; w = nv.next(w + 1)) {
                if (g.adjacent(u, w)) continue;
                VertexSet corridor = ~nv;
                corridor.erase(v);
                corridor.insert(u);
                corridor.insert(w);
                auto path = shortest_path(g, corridor, u, w);
                if (path.empty()) continue;
                std::vector<Vertex> hole{v};
                hole.insert(hole.end(), path.begin(), path.end());
                return hole;
            }
    }
    return {};
}

inline ChordalityResult is_chordal(const Graph& g) {
    ChordalityResult r;
    auto visit = mcs_order(g);
    std::vector<Vertex> peo(visit.rbegin(), visit.rend());
    if (is_perfect_elimination_order(g, peo)) {
        r.chordal = true;
        r.elimination_order = std::move(peo);
    } else {
        r.hole = find_hole(g);
    }
    return r;
}

/// Fill edges (u < v), sorted.
using FillIn = std::vector<Edge>;

inline Graph add_edges(const Graph& g, const FillIn& fill) {
    auto edges = g.edges();
    edges.insert(edges.end(), fill.begin(), fill.end());
    return Graph(g.n(), edges, g.weights());
}

/// Inclusion-minimal fill-in: LEX M labelling search followed by a pass that
/// drops any fill edge whose removal keeps the completion chordal.
inline FillIn minimal_triangulation(const Graph& g) {
    const int n = g.n();
    std::vector<std::vector<int>> label(static_cast<std::size_t>(n));
    std::vector<bool> numbered(static_cast<std::size_t>(n), false);
    FillIn fill;

    for (int number = n; number >= 1; --number) {
        Vertex v = -1;
        for (Vertex u = 0; u < n; ++u)
            if (!numbered[static_cast<std::size_t>(u)] && (v < 0 || label[static_cast<std::size_t>(u)] > label[static_cast<std::size_t>(v)])) v = u;
        numbered[static_cast<std::size_t>(v)] = true;

        // w is reached when some v..w path has all interior vertices unnumbered
        // and labelled strictly below w.
        std::vector<Vertex> reached;
        for (Vertex w = 0; w < n; ++w) {
            if (numbered[static_cast<std::size_t>(w)]) continue;
            const auto& lw = label[static_cast<std::size_t>(w)];
            VertexSet corridor(n);
            for (Vertex z = 0; z < n; ++z)
                if (!numbered[static_cast<std::size_t>(z)] && label[static_cast<std::size_t>(z)] < lw) corridor.insert(z);
            corridor.insert(v);
            corridor.insert(w);
            if (g.adjacent(v, w) || !shortest_path(g, corridor, v, w).empty()) reached.push_back(w);
        }
        for (Vertex w : reached) {
            label[static_cast<std::size_t>(w)].push_back(number);
            if (!g.adjacent(v, w)) fill.emplace_back(std::min(v, w), std::max(v, w));
        }
    }
    std::sort(fill.begin(), fill.end());

    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < fill.size(); ++i) {
            FillIn trial = fill;
            trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
            if (is_chordal(add_edges(g, trial)).chordal) {
                fill = std::move(trial);
                changed = true;
                break;
            }
        }
    }
    return fill;
}

struct CliqueTree {
    std::vector<VertexSet> bags;
    /// Tree edges over bag indices, (i, j) with i < j.
    std::vector<std::pair<int, int>> edges;
};

/// Maximal cliques of a chordal graph, sorted.
inline std::vector<VertexSet> maximal_cliques_chordal(const Graph& h, const std::vector<Vertex>& peo) {
    std::vector<VertexSet> cand;
    VertexSet later = h.all();
    for (Vertex v : peo) {
        later.erase(v);
        VertexSet c = h.neighbors(v) & later;
        c.insert(v);
        cand.push_back(std::move(c));
    }
    canonicalize(cand);
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < cand.size() && maximal; ++j)
            if (i != j && cand[i].is_subset_of(cand[j])) maximal = false;
        if (maximal) out.push_back(cand[i]);
    }
    return out;
}

/// Clique tree of g + fill; throws PreconditionViolation if that is not chordal.
/// Built as a maximum-weight spanning forest of the clique intersection graph.
inline CliqueTree clique_tree(const Graph& g, const FillIn& fill) {
    Graph h = add_edges(g, fill);
    auto chordality = is_chordal(h);
    if (!chordality.chordal) throw PreconditionViolation("clique_tree requires a chordal completion");
    CliqueTree tree;
    tree.bags = maximal_cliques_chordal(h, chordality.elimination_order);
    const int m = static_cast<int>(tree.bags.size());

    std::vector<std::tuple<int, int, int>> cand;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int w = tree.bags[static_cast<std::size_t>(i)].intersection_size(tree.bags[static_cast<std::size_t>(j)]);
            if (w > 0) cand.emplace_back(-w, i, j);
        }
    std::sort(cand.begin(), cand.end());
    std::vector<int> root(static_cast<std::size_t>(m));
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
        return x;
    };
    for (auto [w, i, j] : cand) {
        int ri = find(i), rj = find(j);
        if (ri == rj) continue;
        root[static_cast<std::size_t>(ri)] = rj;
        tree.edges.emplace_back(i, j);
    }
    std::sort(tree.edges.begin(), tree.edges.end());
    return tree;
}

}  // namespace holefree
