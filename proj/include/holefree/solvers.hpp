#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "holefree/config.hpp"
#include "holefree/engine.hpp"
#include "holefree/error.hpp"
#include "holefree/graph.hpp"
#include "holefree/pmc.hpp"
#include "holefree/recognition.hpp"

namespace holefree {

inline const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::Bt: return "bt";
        case Strategy::Subexp1: return "subexp1";
        case Strategy::Subexp2: return "subexp2";
        case Strategy::Brute: return "brute";
        case Strategy::Auto: return "auto";
    }
    return "?";
}

inline std::optional<Strategy> parse_strategy(std::string_view s) {
    for (Strategy st : {Strategy::Bt, Strategy::Subexp1, Strategy::Subexp2, Strategy::Brute, Strategy::Auto})
        if (s == to_string(st)) return st;
    return std::nullopt;
}

/// The n^O(k) algorithm for (long-hole, k-prism)-free graphs. k is never an
/// input: prism-freeness only bounds how many separators the pipeline meets.
inline SolveResult solve_kprism_alg(const Graph& g, const SolverConfig& cfg = {}) { return solve_mwis(g, cfg); }

namespace detail {

inline SolveResult lift_result(const InducedSubgraph& sub, SolveResult r, int parent_n) {
    r.set = sub.lift(r.set, parent_n);
    return r;
}

inline VertexSet strip_zero_weight(const Graph& g, VertexSet s) {
    s.for_each([&](Vertex v) {
        if (g.weight(v).is_zero()) s.erase(v);
    });
    return s;
}

inline SolveResult subexp1_rec(const Graph& h, const SolverConfig& cfg, std::size_t& branches) {
    if (h.n() == 0) return {Weight{}, h.empty_set(), "subexp1", {}};
    if (h.n() < cfg.subexp1_floor) return brute_force_mwis(h, h.n());
    const int k = static_cast<int>(std::floor(std::sqrt(static_cast<double>(h.n()))));
    auto prism = find_k_prism(h, k);
    if (!prism) return solve_kprism_alg(h, cfg);

    const VertexSet pv = prism->vertices(h.n());
    std::vector<VertexSet> guesses{h.empty_set()};
    pv.for_each([&](Vertex p) { guesses.push_back(VertexSet::singleton(h.n(), p)); });
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) guesses.push_back(VertexSet(h.n(), {prism->a[static_cast<std::size_t>(i)], prism->b[static_cast<std::size_t>(j)]}));

    std::optional<SolveResult> best;
    for (const auto& guess : guesses) {
        ++branches;
        VertexSet keep = ~(pv | open_neighborhood(h, guess));
        auto sub = induced_subgraph(h, keep);
        SolveResult r = subexp1_rec(sub.graph, cfg, branches);
        Weight total = r.weight + h.total_weight(guess);
        if (!best || total > best->weight) {
            SolveResult lifted = lift_result(sub, std::move(r), h.n());
            lifted.set |= guess;
            lifted.weight = total;
            best = std::move(lifted);
        }
    }
    best->set = strip_zero_weight(h, best->set);
    return *best;
}

}  // namespace detail

/// Prism branching: with k = ⌊√n⌋, an induced k-prism P meets any independent
/// set in ∅, one vertex, or a nonadjacent pair {a_i, b_j}; each guess deletes
/// V(P) and the guess's neighbourhood and recurses. Without a k-prism the
/// separator pipeline takes over. Below `cfg.subexp1_floor` vertices the
/// residue is solved by brute force.
inline SolveResult solve_subexp1(const Graph& g, const SolverConfig& cfg = {}) {
    const auto start = std::chrono::steady_clock::now();
    std::size_t branches = 0;
    SolveResult r = detail::subexp1_rec(g, cfg, branches);
    r.strategy = "subexp1";
    r.stats.branches = branches;
    r.stats.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    check_solution(g, r);
    return r;
}

struct BalancedSeparatorResult {
    VertexSet bag;        // the chosen PMC
    VertexSet z;          // |z| <= 3, empty when degraded
    VertexSet separator;  // N[z], or the bag when degraded
    Weight max_component_weight;
    DominationMethod method = DominationMethod::SingleVertex;
    bool degraded = false;
};

/// Heaviest component of g - x, by the graph's own weights.
inline Weight max_component_weight(const Graph& g, const VertexSet& x) {
    Weight best;
    for (const auto& c : components(g, ~x)) best = std::max(best, g.total_weight(c));
    return best;
}

/// Balanced separator N[Z] with |Z| <= 3 for connected g.
///
/// Every edge of a clique tree of a minimal triangulation is oriented towards
/// the side whose bag union is heavier (ties towards the side holding node 0);
/// the bag at the first sink is a PMC whose removal leaves components of at
/// most half the total weight, and dominate_pmc shrinks it to N[Z].
inline BalancedSeparatorResult balanced_separator(const Graph& g) {
    if (g.n() == 0 || !is_connected(g)) throw PreconditionViolation("balanced_separator requires a nonempty connected graph");
    if (g.total_weight().is_zero()) throw PreconditionViolation("balanced_separator requires positive total weight");

    CliqueTree tree = clique_tree(g, minimal_triangulation(g));
    const int m = static_cast<int>(tree.bags.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
    for (auto [i, j] : tree.edges) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
    }
    // Nodes reachable from `from` without crossing `blocked`.
    auto side = [&](int from, int blocked) {
        std::vector<int> nodes{from};
        std::vector<bool> seen(static_cast<std::size_t>(m), false);
        seen[static_cast<std::size_t>(from)] = true;
        seen[static_cast<std::size_t>(blocked)] = true;
        for (std::size_t h = 0; h < nodes.size(); ++h)
            for (int y : adj[static_cast<std::size_t>(nodes[h])])
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = true;
                    nodes.push_back(y);
                }
        return nodes;
    };
    std::vector<int> outdeg(static_cast<std::size_t>(m), 0);
    for (auto [i, j] : tree.edges) {
        auto si = side(i, j), sj = side(j, i);
        VertexSet ui(g.n()), uj(g.n());
        for (int x : si) ui |= tree.bags[static_cast<std::size_t>(x)];
        for (int x : sj) uj |= tree.bags[static_cast<std::size_t>(x)];
        Weight wi = g.total_weight(ui), wj = g.total_weight(uj);
        bool toward_j;
        if (wi != wj)
            toward_j = wj > wi;
        else
            toward_j = *std::min_element(sj.begin(), sj.end()) < *std::min_element(si.begin(), si.end());
        ++outdeg[static_cast<std::size_t>(toward_j ? i : j)];
    }
    const int sink = static_cast<int>(std::find(outdeg.begin(), outdeg.end(), 0) - outdeg.begin());

    BalancedSeparatorResult r;
    r.bag = tree.bags[static_cast<std::size_t>(sink)];
    auto pmc = is_pmc(g, r.bag);
    if (!pmc) throw WitnessNotFound("clique-tree bag of a minimal triangulation failed the PMC test");
    try {
        DominationResult dom = dominate_pmc(g, *pmc);
        r.z = dom.z;
        r.method = dom.method;
        r.separator = closed_neighborhood(g, dom.z);
    } catch (const NoDomination&) {
        r.degraded = true;
        r.method = DominationMethod::BruteFallback;
        r.z = g.empty_set();
        r.separator = r.bag;
    }
    r.max_component_weight = max_component_weight(g, r.separator);
    return r;
}

struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> edges;

    int width() const {
        int w = 0;
        for (const auto& b : bags) w = std::max(w, b.size());
        return w - 1;
    }
};

/// Whether td is a tree decomposition of g: a tree, every vertex and edge
/// covered, and each vertex's bags forming a subtree.
inline bool is_valid_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    const int m = static_cast<int>(td.bags.size());
    if (m == 0) return g.n() == 0;
    if (static_cast<int>(td.edges.size()) != m - 1) return false;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
    for (auto [i, j] : td.edges) {
        if (i < 0 || j < 0 || i >= m || j >= m || i == j) return false;
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
    }
    auto connected_within = [&](const std::vector<bool>& allowed) {
        int start = -1, count = 0;
        for (int i = 0; i < m; ++i)
            if (allowed[static_cast<std::size_t>(i)]) {
                ++count;
                if (start < 0) start = i;
            }
        if (count == 0) return false;
        std::vector<bool> seen(static_cast<std::size_t>(m), false);
        std::vector<int> stack{start};
        seen[static_cast<std::size_t>(start)] = true;
        int reached = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++reached;
            for (int y : adj[static_cast<std::size_t>(x)])
                if (allowed[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = true;
                    stack.push_back(y);
                }
        }
        return reached == count;
    };
    if (!connected_within(std::vector<bool>(static_cast<std::size_t>(m), true))) return false;
    for (Vertex v = 0; v < g.n(); ++v) {
        std::vector<bool> has(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) has[static_cast<std::size_t>(i)] = td.bags[static_cast<std::size_t>(i)].contains(v);
        if (!connected_within(has)) return false;
    }
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& b : td.bags) covered = covered || (b.contains(u) && b.contains(v));
        if (!covered) return false;
    }
    return true;
}

namespace detail {

// Node for connected part C: bag N(C) ∪ X with X a balanced separator of g[C]
// under unit weights, children for the components of g[C] - X.
inline int decompose_part(const Graph& g, const VertexSet& part, TreeDecomposition& td) {
    VertexSet x = part;
    if (part.size() > 1) {
        auto sub = induced_subgraph(g, part);
        Graph unit = sub.graph.with_weights(std::vector<Weight>(static_cast<std::size_t>(sub.graph.n()), Weight::from_integer(1)));
        x = sub.lift(balanced_separator(unit).separator, g.n());
    }
    const int node = static_cast<int>(td.bags.size());
    td.bags.push_back(open_neighborhood(g, part) | x);
    for (const auto& c : components(g, part - x)) {
        int child = decompose_part(g, c, td);
        td.edges.emplace_back(node, child);
    }
    return node;
}

}  // namespace detail

/// Tree decomposition by recursive balanced separators. Validity is checked
/// before returning; the width is best-effort.
inline TreeDecomposition build_tree_decomposition(const Graph& g) {
    TreeDecomposition td;
    int prev_root = -1;
    for (const auto& comp : components(g)) {
        int root = detail::decompose_part(g, comp, td);
        if (prev_root >= 0) td.edges.emplace_back(prev_root, root);
        prev_root = root;
    }
    for (auto& e : td.edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(td.edges.begin(), td.edges.end());
    if (!is_valid_tree_decomposition(g, td)) throw Error("internal error: invalid tree decomposition");
    return td;
}

/// Exact MWIS by dynamic programming over independent subsets of each bag.
/// Throws WidthTooLarge when a bag exceeds `max_bag_size` vertices.
inline SolveResult solve_treewidth_dp(const Graph& g, const TreeDecomposition& td, int max_bag_size = 25) {
    using Mask = std::uint64_t;
    const auto start = std::chrono::steady_clock::now();
    SolveResult result{Weight{}, g.empty_set(), "treewidth-dp", {}};
    const int m = static_cast<int>(td.bags.size());
    if (m == 0) return result;
    if (max_bag_size > 62) max_bag_size = 62;
    for (const auto& b : td.bags)
        if (b.size() > max_bag_size)
            throw WidthTooLarge("bag of " + std::to_string(b.size()) + " vertices exceeds limit " + std::to_string(max_bag_size));

    // Root at node 0; order parents before children.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
    for (auto [i, j] : td.edges) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
    }
    std::vector<int> order{0}, parent(static_cast<std::size_t>(m), -1);
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    seen[0] = true;
    for (std::size_t h = 0; h < order.size(); ++h)
        for (int y : adj[static_cast<std::size_t>(order[h])])
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                parent[static_cast<std::size_t>(y)] = order[h];
                order.push_back(y);
            }

    std::vector<std::vector<Vertex>> bag(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) bag[static_cast<std::size_t>(i)] = td.bags[static_cast<std::size_t>(i)].to_vector();

    struct Node {
        std::unordered_map<Mask, Weight> best;  // independent subset of bag -> value of its subtree
        // For the edge to the parent: projected mask -> (value, child mask).
        std::unordered_map<Mask, std::pair<Weight, Mask>> up;
        std::vector<int> to_parent_pos;  // position in parent bag, or -1
    };
    std::vector<Node> nodes(static_cast<std::size_t>(m));

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int t = *it;
        const auto& b = bag[static_cast<std::size_t>(t)];
        const int k = static_cast<int>(b.size());
        std::vector<Mask> local_adj(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (g.adjacent(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)])) local_adj[static_cast<std::size_t>(i)] |= Mask{1} << j;

        std::vector<int> kids;
        for (int y : adj[static_cast<std::size_t>(t)])
            if (parent[static_cast<std::size_t>(y)] == t) kids.push_back(y);
        // Position of each child's intersection vertices in this bag.
        for (int c : kids) {
            auto& cn = nodes[static_cast<std::size_t>(c)];
            cn.to_parent_pos.clear();
            for (Vertex v : bag[static_cast<std::size_t>(c)]) {
                auto p = std::lower_bound(b.begin(), b.end(), v);
                cn.to_parent_pos.push_back(p != b.end() && *p == v ? static_cast<int>(p - b.begin()) : -1);
            }
            for (const auto& [cm, val] : cn.best) {
                Mask proj = 0;
                Weight shared;
                for (std::size_t i = 0; i < cn.to_parent_pos.size(); ++i)
                    if ((cm >> i & 1u) && cn.to_parent_pos[i] >= 0) {
                        proj |= Mask{1} << cn.to_parent_pos[i];
                        shared += g.weight(bag[static_cast<std::size_t>(c)][i]);
                    }
                Weight contrib = val - shared;
                auto [pos, inserted] = cn.up.try_emplace(proj, contrib, cm);
                if (!inserted && (contrib > pos->second.first || (contrib == pos->second.first && cm < pos->second.second)))
                    pos->second = {contrib, cm};
            }
        }
        // Each child's "intersection mask" within this bag.
        std::vector<Mask> inter(kids.size(), 0);
        for (std::size_t c = 0; c < kids.size(); ++c)
            for (int p : nodes[static_cast<std::size_t>(kids[c])].to_parent_pos)
                if (p >= 0) inter[c] |= Mask{1} << p;

        auto& tn = nodes[static_cast<std::size_t>(t)];
        auto visit = [&](auto&& self, int i, Mask chosen, Mask banned, Weight w) -> void {
            if (i == k) {
                Weight total = w;
                for (std::size_t c = 0; c < kids.size(); ++c)
                    total += nodes[static_cast<std::size_t>(kids[c])].up.at(chosen & inter[c]).first;
                tn.best.emplace(chosen, total);
                return;
            }
            self(self, i + 1, chosen, banned, w);
            if (!(banned >> i & 1u))
                self(self, i + 1, chosen | Mask{1} << i, banned | local_adj[static_cast<std::size_t>(i)], w + g.weight(b[static_cast<std::size_t>(i)]));
        };
        visit(visit, 0, 0, 0, Weight{});
    }

    // Root choice, then each child's recorded best extension.
    Mask root_mask = 0;
    std::optional<Weight> top;
    for (const auto& [mk, val] : nodes[0].best)
        if (!top || val > *top || (val == *top && mk < root_mask)) {
            top = val;
            root_mask = mk;
        }
    std::vector<Mask> chosen(static_cast<std::size_t>(m), 0);
    chosen[0] = root_mask;
    for (int t : order) {
        const auto& b = bag[static_cast<std::size_t>(t)];
        for (std::size_t i = 0; i < b.size(); ++i)
            if (chosen[static_cast<std::size_t>(t)] >> i & 1u) result.set.insert(b[i]);
        for (int y : adj[static_cast<std::size_t>(t)]) {
            if (parent[static_cast<std::size_t>(y)] != t) continue;
            const auto& yn = nodes[static_cast<std::size_t>(y)];
            Mask key = 0;
            for (int p : yn.to_parent_pos)
                if (p >= 0) key |= Mask{1} << p;
            chosen[static_cast<std::size_t>(y)] = yn.up.at(chosen[static_cast<std::size_t>(t)] & key).second;
        }
    }
    result.weight = *top;
    result.set = detail::strip_zero_weight(g, result.set);
    result.stats.table_entries = 0;
    for (const auto& nd : nodes) result.stats.table_entries += nd.best.size();
    result.stats.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    check_solution(g, result);
    return result;
}

namespace detail {

inline SolveResult subexp2_rec(const Graph& h, int tau, const SolverConfig& cfg, std::size_t& branches) {
    if (h.n() == 0) return {Weight{}, h.empty_set(), "subexp2", {}};
    Vertex pivot = 0;
    for (Vertex v = 1; v < h.n(); ++v)
        if (h.degree(v) > h.degree(pivot)) pivot = v;
    if (h.degree(pivot) < tau) {
        TreeDecomposition td = build_tree_decomposition(h);
        try {
            return solve_treewidth_dp(h, td, cfg.max_bag_size);
        } catch (const WidthTooLarge&) {
            if (h.n() <= cfg.brute_limit) return brute_force_mwis(h, cfg.brute_limit);
            throw CapacityExceeded("tree decomposition of width " + std::to_string(td.width()), static_cast<std::size_t>(td.width()) + 1);
        }
    }
    branches += 2;
    VertexSet with = closed_neighborhood(h, VertexSet::singleton(h.n(), pivot));
    auto sub_in = induced_subgraph(h, ~with);
    SolveResult in = subexp2_rec(sub_in.graph, tau, cfg, branches);
    Weight in_total = in.weight + h.weight(pivot);

    VertexSet without = VertexSet::singleton(h.n(), pivot);
    auto sub_out = induced_subgraph(h, ~without);
    SolveResult out = subexp2_rec(sub_out.graph, tau, cfg, branches);

    if (in_total >= out.weight) {
        SolveResult r = lift_result(sub_in, std::move(in), h.n());
        r.set.insert(pivot);
        r.weight = in_total;
        r.set = strip_zero_weight(h, r.set);
        return r;
    }
    return lift_result(sub_out, std::move(out), h.n());
}

}  // namespace detail

/// Branching threshold ⌈√(n ln n)⌉, at least 1.
inline int degree_threshold(int n) {
    if (n < 2) return 1;
    return std::max(1, static_cast<int>(std::ceil(std::sqrt(n * std::log(static_cast<double>(n))))));
}

/// Branch on vertices of degree >= τ (in / out of the solution); once the
/// maximum degree drops below τ, solve over a tree decomposition.
inline SolveResult solve_subexp2(const Graph& g, const SolverConfig& cfg = {}) {
    const auto start = std::chrono::steady_clock::now();
    std::size_t branches = 0;
    SolveResult r = detail::subexp2_rec(g, degree_threshold(g.n()), cfg, branches);
    r.strategy = "subexp2";
    r.stats.branches = branches;
    r.stats.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    check_solution(g, r);
    return r;
}

/// Strategy dispatch. Auto runs the pipeline and falls back to prism
/// branching when a cap is hit.
inline SolveResult solve(const Graph& g, const SolverConfig& cfg = {}) {
    switch (cfg.strategy) {
        case Strategy::Bt: return solve_kprism_alg(g, cfg);
        case Strategy::Subexp1: return solve_subexp1(g, cfg);
        case Strategy::Subexp2: return solve_subexp2(g, cfg);
        case Strategy::Brute: {
            const auto start = std::chrono::steady_clock::now();
            SolveResult r = brute_force_mwis(g, cfg.brute_limit);
            r.stats.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            return r;
        }
        case Strategy::Auto:
            try {
                return solve_kprism_alg(g, cfg);
            } catch (const CapacityExceeded&) {
                return solve_subexp1(g, cfg);
            }
    }
    throw PreconditionViolation("unknown strategy");
}

/// Same optimum as solve(), but the witness is the lexicographically smallest
/// optimal set without zero-weight vertices (the brute-force convention).
/// Decides vertices in index order by self-reduction, at most n extra solves on
/// induced subgraphs. The stats are those of the first solve.
inline SolveResult solve_canonical(const Graph& g, const SolverConfig& cfg = {}) {
    const auto start = std::chrono::steady_clock::now();
    SolveResult r = solve(g, cfg);
    auto optimum = [&](const VertexSet& keep) {
        if (keep.empty()) return Weight{};
        return solve(induced_subgraph(g, keep).graph, cfg).weight;
    };
    VertexSet alive = g.all(), chosen = g.empty_set();
    Weight remaining = r.weight;
    for (Vertex v = 0; v < g.n() && !remaining.is_zero(); ++v) {
        if (!alive.contains(v)) continue;
        alive.erase(v);
        if (g.weight(v).is_zero()) continue;
        VertexSet rest = alive - g.neighbors(v);
        if (g.weight(v) + optimum(rest) == remaining) {
            chosen.insert(v);
            remaining = remaining - g.weight(v);
            alive = rest;
        }
    }
    r.set = chosen;
    r.stats.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    check_solution(g, r);
    return r;
}

/// Maximum weight clique of g, as an MWIS of the complement.
inline SolveResult solve_mwc_complement(const Graph& g, const SolverConfig& cfg = {}) {
    SolveResult r = solve(complement(g), cfg);
    if (!g.is_clique(r.set)) throw WitnessNotFound("complement solution is not a clique");
    return r;
}

}  // namespace holefree
