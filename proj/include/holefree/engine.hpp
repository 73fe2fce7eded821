#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "holefree/config.hpp"
#include "holefree/error.hpp"
#include "holefree/graph.hpp"
#include "holefree/pmc.hpp"
#include "holefree/separators.hpp"

namespace holefree {

struct SolveStats {
    std::size_t minseps = 0;
    std::size_t pmcs = 0;
    std::size_t blocks = 0;
    std::size_t table_entries = 0;
    std::size_t branches = 0;
    double elapsed_ms = 0.0;

    SolveStats& operator+=(const SolveStats& o) {
        minseps += o.minseps;
        pmcs += o.pmcs;
        blocks += o.blocks;
        table_entries += o.table_entries;
        branches += o.branches;
        return *this;
    }
};

struct SolveResult {
    Weight weight;
    VertexSet set;
    std::string strategy;
    SolveStats stats;
};

/// Throws WitnessNotFound unless `r.set` is independent, has weight
/// `r.weight`, and contains no zero-weight vertex.
inline void check_solution(const Graph& g, const SolveResult& r) {
    if (r.set.capacity() != g.n()) throw WitnessNotFound("witness has wrong capacity");
    if (!g.is_independent(r.set)) throw WitnessNotFound("witness is not independent");
    if (g.total_weight(r.set) != r.weight) throw WitnessNotFound("witness weight differs from reported optimum");
    r.set.for_each([&](Vertex v) {
        if (g.weight(v).is_zero()) throw WitnessNotFound("witness contains a zero-weight vertex");
    });
}

/// DP unit: a connected set D with its neighbourhood S = N(D).
struct Block {
    VertexSet d;
    VertexSet s;
    int id = 0;
};

/// Blocks from a block family, ordered by |D| then by D.
inline std::vector<Block> make_blocks(const Graph& g, const std::vector<VertexSet>& family) {
    std::vector<Block> out;
    out.reserve(family.size());
    for (const auto& d : family) out.push_back({d, open_neighborhood(g, d), 0});
    std::stable_sort(out.begin(), out.end(), [](const Block& a, const Block& b) {
        if (a.d.size() != b.d.size()) return a.d.size() < b.d.size();
        return a.d < b.d;
    });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i);
    return out;
}

/// For each block (S, D): indices of the PMCs Ω with S ⊆ Ω ⊆ S ∪ D.
inline std::vector<std::vector<int>> index_caps(const Graph& g, const std::vector<Pmc>& pmcs, const std::vector<Block>& blocks) {
    (void)g;
    std::vector<std::vector<int>> caps(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        VertexSet closure = blocks[b].s | blocks[b].d;
        for (std::size_t p = 0; p < pmcs.size(); ++p) {
            const VertexSet& om = pmcs[p].set;
            if (blocks[b].s.is_subset_of(om) && om.is_subset_of(closure) && om.intersects(blocks[b].d))
                caps[b].push_back(static_cast<int>(p));
        }
    }
    return caps;
}

namespace detail {

// α(D, u): best weight of an independent I ⊆ D compatible with the optimum
// meeting S in exactly {u} (slot 1 + position of u in S) or not at all (slot 0).
struct DpTable {
    struct Child {
        int block;
        std::vector<Vertex> attach;  // N(child), sorted
    };
    struct Cap {
        int pmc;
        std::vector<Child> children;
    };
    struct Choice {
        int cap = -1;
        Vertex t = -1;
    };
    std::vector<std::vector<Vertex>> sep;                   // S of each block, sorted
    std::vector<std::vector<std::optional<Weight>>> value;  // nullopt = minus infinity
    std::vector<std::vector<Choice>> choice;
    std::vector<std::vector<Cap>> caps;

    static int slot_of(const std::vector<Vertex>& s, Vertex t) {
        if (t < 0) return 0;
        auto it = std::lower_bound(s.begin(), s.end(), t);
        return it != s.end() && *it == t ? static_cast<int>(it - s.begin()) + 1 : 0;
    }
};

}  // namespace detail

/// Exact MWIS of a connected graph from its complete PMC family.
///
/// For block (S, D) and trace u ∈ S ∪ {none}:
///   α(D, u) = max over caps Ω and t (t = u when u ≠ none, else
///   t ∈ (Ω ∩ D) ∪ {none}) of w(t)·[t ∈ D] + Σ α(D', t if t ∈ N(D') else none)
/// where D' ranges over cc(g[D] - Ω). The whole graph is the block (∅, V),
/// capped by every PMC. Capless blocks evaluate to minus infinity.
inline SolveResult solve_bt(const Graph& g, const std::vector<Pmc>& pmcs, const std::vector<Block>& blocks_in) {
    const auto start = std::chrono::steady_clock::now();
    const int n = g.n();
    SolveResult result{Weight{}, g.empty_set(), "bt", {}};
    if (n == 0) return result;
    if (!is_connected(g)) throw PreconditionViolation("solve_bt requires a connected graph");

    std::vector<Block> blocks = blocks_in;
    blocks.push_back({g.all(), g.empty_set(), static_cast<int>(blocks.size())});
    const int root = static_cast<int>(blocks.size()) - 1;

    std::unordered_map<VertexSet, int, VertexSetHash> index;
    for (const auto& b : blocks) index.emplace(b.d, b.id);

    auto cap_lists = index_caps(g, pmcs, blocks);
    cap_lists[static_cast<std::size_t>(root)].clear();
    for (std::size_t p = 0; p < pmcs.size(); ++p) cap_lists[static_cast<std::size_t>(root)].push_back(static_cast<int>(p));

    detail::DpTable table;
    table.sep.resize(blocks.size());
    table.value.resize(blocks.size());
    table.choice.resize(blocks.size());
    table.caps.resize(blocks.size());
    for (const auto& b : blocks) table.sep[static_cast<std::size_t>(b.id)] = b.s.to_vector();
    for (const auto& b : blocks) {
        auto id = static_cast<std::size_t>(b.id);
        table.value[id].assign(table.sep[id].size() + 1, std::nullopt);
        table.choice[id].assign(table.sep[id].size() + 1, {});
        result.stats.table_entries += table.sep[id].size() + 1;
        for (int p : cap_lists[id]) {
            detail::DpTable::Cap cap{p, {}};
            for (const auto& child : components(g, b.d - pmcs[static_cast<std::size_t>(p)].set)) {
                auto it = index.find(child);
                if (it == index.end()) throw PreconditionViolation("block family misses a component of G - Ω; PMC family incomplete");
                cap.children.push_back({it->second, table.sep[static_cast<std::size_t>(it->second)]});
            }
            table.caps[id].push_back(std::move(cap));
        }
    }

    // Sum over children with trace t; nullopt if any child is minus infinity.
    auto children_value = [&](const detail::DpTable::Cap& cap, Vertex t) -> std::optional<Weight> {
        Weight sum;
        for (const auto& ch : cap.children) {
            const auto& v = table.value[static_cast<std::size_t>(ch.block)][static_cast<std::size_t>(detail::DpTable::slot_of(ch.attach, t))];
            if (!v) return std::nullopt;
            sum += *v;
        }
        return sum;
    };

    for (const auto& b : blocks) {
        auto id = static_cast<std::size_t>(b.id);
        const auto& caps = table.caps[id];
        for (std::size_t slot = 0; slot < table.value[id].size(); ++slot) {
            std::optional<Weight> best;
            detail::DpTable::Choice best_choice;
            for (std::size_t c = 0; c < caps.size(); ++c) {
                auto consider = [&](Vertex t, Weight own) {
                    auto rest = children_value(caps[c], t);
                    if (!rest) return;
                    Weight total = own + *rest;
                    if (!best || total > *best) {
                        best = total;
                        best_choice = {static_cast<int>(c), t};
                    }
                };
                if (slot > 0) {
                    consider(table.sep[id][slot - 1], Weight{});
                } else {
                    consider(-1, Weight{});
                    VertexSet inner = pmcs[static_cast<std::size_t>(caps[c].pmc)].set & b.d;
                    inner.for_each([&](Vertex t) { consider(t, g.weight(t)); });
                }
            }
            table.value[id][slot] = best;
            table.choice[id][slot] = best_choice;
        }
    }

    const auto& top = table.value[static_cast<std::size_t>(root)][0];
    if (!top) throw PreconditionViolation("no PMC caps the whole graph; PMC family incomplete");
    result.weight = *top;

    std::vector<std::pair<int, Vertex>> stack{{root, -1}};
    while (!stack.empty()) {
        auto [bid, trace] = stack.back();
        stack.pop_back();
        auto id = static_cast<std::size_t>(bid);
        auto slot = static_cast<std::size_t>(detail::DpTable::slot_of(table.sep[id], trace));
        const auto& ch = table.choice[id][slot];
        const auto& cap = table.caps[id][static_cast<std::size_t>(ch.cap)];
        if (ch.t >= 0 && blocks[id].d.contains(ch.t)) result.set.insert(ch.t);
        for (const auto& child : cap.children) stack.emplace_back(child.block, detail::DpTable::slot_of(child.attach, ch.t) > 0 ? ch.t : -1);
    }
    result.set.for_each([&](Vertex v) {
        if (g.weight(v).is_zero()) result.set.erase(v);
    });

    result.stats.pmcs = pmcs.size();
    result.stats.blocks = blocks_in.size();
    result.stats.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    check_solution(g, result);
    return result;
}

namespace detail {

template <class PerComponent>
SolveResult solve_by_components(const Graph& g, const std::string& strategy, PerComponent&& solve_component) {
    const auto start = std::chrono::steady_clock::now();
    SolveResult total{Weight{}, g.empty_set(), strategy, {}};
    for (const auto& comp : components(g)) {
        auto sub = induced_subgraph(g, comp);
        SolveResult part = solve_component(sub.graph);
        total.weight += part.weight;
        total.set |= sub.lift(part.set, g.n());
        total.stats += part.stats;
    }
    total.stats.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    check_solution(g, total);
    return total;
}

}  // namespace detail

/// Exact MWIS through the separator / PMC pipeline, component by component.
/// Throws CapacityExceeded when a configured cap is hit.
inline SolveResult solve_mwis(const Graph& g, const SolverConfig& cfg = {}) {
    return detail::solve_by_components(g, "bt", [&](const Graph& h) {
        auto seps = enumerate_minimal_separators(h, cfg.cap_separators);
        auto blocks = make_blocks(h, block_family(h, seps));
        auto pmcs = enumerate_pmcs(h, seps, PmcMode::Incremental, {cfg.cap_pmcs, cfg.cap_separators});
        SolveResult r = solve_bt(h, pmcs, blocks);
        r.stats.minseps = seps.size();
        return r;
    });
}

/// Test oracle: include-first branch and bound over vertices in index order.
/// The witness is the lexicographically smallest maximum-weight independent
/// set among those without zero-weight vertices.
inline SolveResult brute_force_mwis(const Graph& g, int limit = oracle_limit(kMwisOracleLimit)) {
    const int n = g.n();
    if (n > limit) throw LimitExceeded("MWIS oracle limited to " + std::to_string(limit) + " vertices");
    std::vector<Weight> suffix(static_cast<std::size_t>(n) + 1);
    for (int v = n - 1; v >= 0; --v) suffix[static_cast<std::size_t>(v)] = suffix[static_cast<std::size_t>(v) + 1] + g.weight(v);

    std::optional<Weight> best;
    VertexSet best_set(n), cur(n), blocked(n);
    Weight cur_w;
    auto rec = [&](auto&& self, int v) -> void {
        if (best && cur_w + suffix[static_cast<std::size_t>(v)] <= *best) return;
        if (v == n) {
            best = cur_w;
            best_set = cur;
            return;
        }
        if (!blocked.contains(v) && !g.weight(v).is_zero()) {
            VertexSet saved = blocked;
            cur.insert(v);
            cur_w += g.weight(v);
            blocked |= g.neighbors(v);
            self(self, v + 1);
            blocked = std::move(saved);
            cur.erase(v);
            cur_w -= g.weight(v);
        }
        self(self, v + 1);
    };
    rec(rec, 0);
    SolveResult r{best.value_or(Weight{}), best_set, "brute", {}};
    check_solution(g, r);
    return r;
}

}  // namespace holefree
