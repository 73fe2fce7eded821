#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "holefree/config.hpp"
#include "holefree/error.hpp"
#include "holefree/graph.hpp"
#include "holefree/separators.hpp"

namespace holefree {

/// A certified potential maximal clique.
struct Pmc {
    struct Cover {
        Vertex x;
        Vertex y;
        int component;  // index into components; x, y ∈ N(component)
    };

    VertexSet set;
    std::vector<VertexSet> components;  // cc(g - set)
    std::vector<VertexSet> attachments; // N(component), parallel to components
    std::vector<Cover> covers;          // one per nonedge inside set, x < y
};

enum class PmcViolation {
    None,
    Empty,
    /// Some component D of g - Ω has N(D) = Ω.
    FullComponent,
    /// Some nonedge inside Ω is covered by no component.
    UncoveredNonedge,
};

namespace detail {

// Both conditions of the characterisation, without building a certificate.
inline PmcViolation pmc_violation(const Graph& g, const VertexSet& omega) {
    if (omega.empty()) return PmcViolation::Empty;
    std::vector<VertexSet> attach;
    for (const auto& d : components(g, ~omega)) {
        VertexSet nd = open_neighborhood(g, d);
        if (nd == omega) return PmcViolation::FullComponent;
        attach.push_back(std::move(nd));
    }
    bool ok = true;
    omega.for_each([&](Vertex x) {
        if (!ok) return;
        VertexSet need = omega - g.neighbors(x);
        need.erase(x);
        if (need.empty()) return;
        VertexSet covered(g.n());
        for (const auto& nd : attach)
            if (nd.contains(x)) covered |= nd;
        ok = need.is_subset_of(covered);
    });
    return ok ? PmcViolation::None : PmcViolation::UncoveredNonedge;
}

}  // namespace detail

/// Certified PMC when Ω satisfies both conditions of the characterisation:
/// every component D of g - Ω has N(D) ⊊ Ω, and every nonedge inside Ω has
/// both ends in N(D) for some component D.
inline std::optional<Pmc> is_pmc(const Graph& g, const VertexSet& omega, PmcViolation* why = nullptr) {
    PmcViolation v = detail::pmc_violation(g, omega);
    if (why != nullptr) *why = v;
    if (v != PmcViolation::None) return std::nullopt;
    Pmc p{omega, components(g, ~omega), {}, {}};
    for (const auto& d : p.components) p.attachments.push_back(open_neighborhood(g, d));
    omega.for_each([&](Vertex x) {
        for (Vertex y = omega.next(x + 1); y >= 0; y = omega.next(y + 1)) {
            if (g.adjacent(x, y)) continue;
            for (std::size_t i = 0; i < p.attachments.size(); ++i)
                if (p.attachments[i].contains(x) && p.attachments[i].contains(y)) {
                    p.covers.push_back({x, y, static_cast<int>(i)});
                    break;
                }
        }
    });
    return p;
}

enum class PmcMode { Incremental, BruteForce };

namespace detail {

// PMCs of a connected graph whose every prefix 0..i-1 induces a connected
// subgraph. Π_i is built from Π_{i-1} and the minimal separators of the
// prefix graph G_i, with a = i-1 the new vertex.
inline std::vector<VertexSet> pmcs_connected_prefix(const Graph& h, std::size_t cap_pmcs, std::size_t cap_seps,
                                                    const std::vector<Separator>* final_seps) {
    std::vector<VertexSet> prev;
    for (int i = 1; i <= h.n(); ++i) {
        std::vector<Vertex> prefix(static_cast<std::size_t>(i));
        for (int v = 0; v < i; ++v) prefix[static_cast<std::size_t>(v)] = v;
        const Graph gi = i == h.n() ? h : induced_subgraph(h, prefix).graph;
        const Vertex a = i - 1;
        std::vector<Separator> seps = enumerate_minimal_separators(gi, cap_seps);
        if (i == h.n() && final_seps != nullptr) {
            for (const auto& s : seps)
                if (std::find(final_seps->begin(), final_seps->end(), s) == final_seps->end())
                    throw PreconditionViolation("incomplete separator input: missing " + [&] {
                        std::ostringstream os;
                        os << s.set;
                        return os.str();
                    }());
        }

        std::unordered_set<VertexSet, VertexSetHash> cand;
        cand.insert(VertexSet::singleton(i, a));
        for (const auto& p : prev) {
            VertexSet q = p.resized(i);
            cand.insert(q);
            q.insert(a);
            cand.insert(std::move(q));
        }
        for (const auto& s : seps) {
            VertexSet sa = s.set;
            sa.insert(a);
            cand.insert(std::move(sa));
            for (const auto& c : s.components)
                for (const auto& t : seps) {
                    VertexSet tc = t.set & c;
                    if (tc.empty()) continue;
                    cand.insert(s.set | tc);
                }
        }

        std::vector<VertexSet> next;
        for (const auto& c : cand)
            if (pmc_violation(gi, c) == PmcViolation::None) {
                next.push_back(c);
                if (cap_pmcs != 0 && next.size() > cap_pmcs) throw CapacityExceeded("potential maximal clique enumeration", next.size());
            }
        std::sort(next.begin(), next.end());
        prev = std::move(next);
    }
    return prev;
}

// Breadth-first order of a connected vertex set, smallest index first.
inline std::vector<Vertex> connected_order(const Graph& g, const VertexSet& comp) {
    std::vector<Vertex> order{comp.first()};
    VertexSet seen = VertexSet::singleton(g.n(), comp.first());
    for (std::size_t head = 0; head < order.size(); ++head) {
        VertexSet nb = g.neighbors(order[head]) & comp;
        nb -= seen;
        nb.for_each([&](Vertex v) {
            seen.insert(v);
            order.push_back(v);
        });
    }
    return order;
}

}  // namespace detail

struct PmcCaps {
    std::size_t max_pmcs = 0;        // 0 = unlimited
    std::size_t max_separators = 0;  // per prefix graph, 0 = unlimited
};

/// Every PMC of g, sorted by vertex set.
///
/// Incremental mode works per connected component, adding vertices in a
/// breadth-first order so that every prefix graph is connected. Candidates for
/// Π_i are Π_{i-1}, Ω' ∪ {a}, S ∪ {a} and S ∪ (T ∩ C) for minimal separators S,
/// T of G_i and C ∈ cc(G_i - S); each is filtered through the PMC test.
/// `minseps` is checked for completeness against the separators recomputed for
/// the full component. Brute-force mode tests every nonempty subset.
inline std::vector<Pmc> enumerate_pmcs(const Graph& g, const std::vector<Separator>& minseps, PmcMode mode = PmcMode::Incremental,
                                       PmcCaps caps = {}) {
    std::vector<VertexSet> sets;
    if (mode == PmcMode::BruteForce) {
        const int limit = oracle_limit(kPmcOracleLimit);
        if (g.n() > limit) throw LimitExceeded("PMC oracle limited to " + std::to_string(limit) + " vertices");
        for (unsigned long long mask = 1; mask < (1ull << g.n()); ++mask) {
            VertexSet s(g.n());
            for (int v = 0; v < g.n(); ++v)
                if (mask >> v & 1u) s.insert(v);
            if (detail::pmc_violation(g, s) == PmcViolation::None) sets.push_back(std::move(s));
        }
    } else {
        for (const auto& comp : components(g)) {
            auto sub = induced_subgraph(g, detail::connected_order(g, comp));
            std::vector<Separator> local;
            for (const auto& s : minseps)
                if (!s.set.empty() && s.set.is_subset_of(comp)) {
                    VertexSet mapped(sub.graph.n());
                    for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
                        if (s.set.contains(sub.to_parent[i])) mapped.insert(static_cast<Vertex>(i));
                    local.push_back(analyze_separator(sub.graph, mapped));
                }
            for (const auto& p : detail::pmcs_connected_prefix(sub.graph, caps.max_pmcs, caps.max_separators, &local)) {
                sets.push_back(sub.lift(p, g.n()));
                if (caps.max_pmcs != 0 && sets.size() > caps.max_pmcs) throw CapacityExceeded("potential maximal clique enumeration", sets.size());
            }
        }
    }
    std::sort(sets.begin(), sets.end());
    std::vector<Pmc> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(*is_pmc(g, s));
    return out;
}

/// Union over minimal separators S of cc(g - S), deduplicated and sorted.
/// Contains every component of g - Ω for every PMC Ω.
inline std::vector<VertexSet> block_family(const Graph& /*g*/, const std::vector<Separator>& minseps) {
    std::vector<VertexSet> out;
    for (const auto& s : minseps) out.insert(out.end(), s.components.begin(), s.components.end());
    canonicalize(out);
    return out;
}

/// A component D of g - Ω with M ⊆ N(D). Returns nullopt when |M| = 1 and
/// Ω ⊆ N[M]; throws WitnessNotFound when neither holds (never for
/// long-hole-free g and independent M).
inline std::optional<VertexSet> find_covering_component(const Graph& g, const Pmc& omega, const VertexSet& m) {
    if (!m.is_subset_of(omega.set)) throw PreconditionViolation("M is not a subset of the PMC");
    if (m.size() == 1 && omega.set.is_subset_of(closed_neighborhood(g, m))) return std::nullopt;
    int best = -1, best_hits = -1;
    for (std::size_t i = 0; i < omega.components.size(); ++i) {
        int hits = omega.attachments[i].intersection_size(m);
        if (hits > best_hits) {
            best = static_cast<int>(i);
            best_hits = hits;
        }
    }
    if (best < 0 || best_hits != m.size()) throw WitnessNotFound("no component of G - Ω sees all of M");
    return omega.components[static_cast<std::size_t>(best)];
}

/// a ∈ N(x) ∩ A, b ∈ N(x) ∩ B with S ⊆ N[x] ∪ N(a) ∪ N(b), first pair in
/// index order.
inline std::pair<Vertex, Vertex> find_xab_cover(const Graph& g, const Separator& sep, int a_idx, int b_idx, Vertex x) {
    if (!sep.set.contains(x)) throw PreconditionViolation("x is not in S");
    auto is_full_idx = [&](int i) { return std::find(sep.full.begin(), sep.full.end(), i) != sep.full.end(); };
    if (a_idx == b_idx || !is_full_idx(a_idx) || !is_full_idx(b_idx)) throw PreconditionViolation("A and B must be distinct full components");
    VertexSet need = sep.set - g.neighbors(x);
    need.erase(x);
    VertexSet as = sep.components[static_cast<std::size_t>(a_idx)] & g.neighbors(x);
    VertexSet bs = sep.components[static_cast<std::size_t>(b_idx)] & g.neighbors(x);
    for (Vertex a = as.first(); a >= 0; a = as.next(a + 1)) {
        VertexSet rest = need - g.neighbors(a);
        for (Vertex b = bs.first(); b >= 0; b = bs.next(b + 1))
            if (rest.is_subset_of(g.neighbors(b))) return {a, b};
    }
    throw WitnessNotFound("no pair (a, b) covers S from x");
}

enum class DominationMethod { SingleVertex, LemmaChain, BruteFallback };

inline const char* to_string(DominationMethod m) {
    switch (m) {
        case DominationMethod::SingleVertex: return "single-vertex";
        case DominationMethod::LemmaChain: return "lemma-chain";
        case DominationMethod::BruteFallback: return "brute-fallback";
    }
    return "?";
}

struct DominationResult {
    VertexSet z;
    DominationMethod method = DominationMethod::SingleVertex;
    /// Lemma-chain trace; -1 / empty when unused.
    Vertex v = -1;
    VertexSet component;
    Vertex x = -1;
    Vertex y = -1;
};

/// No set of at most three vertices dominates the PMC.
class NoDomination : public WitnessNotFound {
public:
    using WitnessNotFound::WitnessNotFound;
};

/// Z with |Z| <= 3 and Ω ⊆ N[Z].
///
/// First looks for a single dominating member of Ω. Otherwise, for each v ∈ Ω:
/// take a component D of g - Ω seeing Ω \ N(v), a second full component B of
/// the minimal separator N(D), and x ∈ D, y ∈ B from find_xab_cover; then
/// Z = {v, x, y}. If no v works (the graph has a long hole), every set of at
/// most three vertices is tried.
inline DominationResult dominate_pmc(const Graph& g, const Pmc& omega) {
    const VertexSet& om = omega.set;
    auto dominates = [&](const VertexSet& z) { return om.is_subset_of(closed_neighborhood(g, z)); };

    for (Vertex v = om.first(); v >= 0; v = om.next(v + 1)) {
        VertexSet z = VertexSet::singleton(g.n(), v);
        if (dominates(z)) return {z, DominationMethod::SingleVertex, v, {}, -1, -1};
    }
    for (Vertex v = om.first(); v >= 0; v = om.next(v + 1)) {
        try {
            VertexSet m = om - g.neighbors(v);
            auto d = find_covering_component(g, omega, m);
            if (!d) continue;
            Separator sep = analyze_separator(g, open_neighborhood(g, *d));
            int d_idx = sep.index_of(*d);
            int b_idx = -1;
            for (int i : sep.full)
                if (i != d_idx) {
                    b_idx = i;
                    break;
                }
            if (d_idx < 0 || b_idx < 0) continue;
            auto [x, y] = find_xab_cover(g, sep, d_idx, b_idx, v);
            VertexSet z(g.n(), {v, x, y});
            if (dominates(z)) return {z, DominationMethod::LemmaChain, v, *d, x, y};
        } catch (const WitnessNotFound&) {
        } catch (const PreconditionViolation&) {
        }
    }
    const int n = g.n();
    for (int size = 1; size <= 3; ++size) {
        std::vector<Vertex> pick(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
        while (size <= n) {
            VertexSet z(n);
            for (Vertex u : pick) z.insert(u);
            if (dominates(z)) return {z, DominationMethod::BruteFallback, -1, {}, -1, -1};
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j) - 1] + 1;
        }
    }
    throw NoDomination("no set of at most three vertices dominates the PMC");
}

}  // namespace holefree
