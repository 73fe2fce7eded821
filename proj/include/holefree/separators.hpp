#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

#include "holefree/config.hpp"
#include "holefree/error.hpp"
#include "holefree/graph.hpp"

namespace holefree {

/// A vertex set with its component decomposition. Full components are those
/// whose neighbourhood is the whole set.
struct Separator {
    VertexSet set;
    std::vector<VertexSet> components;  // cc(g - set), canonical order
    std::vector<int> full;              // indices into components

    bool is_minimal() const noexcept { return full.size() >= 2; }
    /// Number of full components minus one, floored at zero.
    int zeta() const noexcept { return full.empty() ? 0 : static_cast<int>(full.size()) - 1; }

    bool is_full(const VertexSet& component) const {
        for (int i : full)
            if (components[static_cast<std::size_t>(i)] == component) return true;
        return false;
    }
    int index_of(const VertexSet& component) const {
        for (std::size_t i = 0; i < components.size(); ++i)
            if (components[i] == component) return static_cast<int>(i);
        return -1;
    }

    friend bool operator==(const Separator& a, const Separator& b) { return a.set == b.set; }
};

inline Separator analyze_separator(const Graph& g, const VertexSet& s) {
    Separator sep{s, components(g, ~s), {}};
    for (std::size_t i = 0; i < sep.components.size(); ++i)
        if (open_neighborhood(g, sep.components[i]) == s) sep.full.push_back(static_cast<int>(i));
    return sep;
}

/// All minimal separators, sorted by vertex set.
///
/// Seeds are N(C) for C ∈ cc(g - N[v]); each discovered S is expanded by N(C)
/// for C ∈ cc(g - (S ∪ N[x])), x ∈ S. `cap` bounds the number of separators
/// (0 = unlimited); exceeding it throws CapacityExceeded.
inline std::vector<Separator> enumerate_minimal_separators(const Graph& g, std::size_t cap = 0) {
    std::unordered_set<VertexSet, VertexSetHash> seen;
    std::deque<VertexSet> work;
    std::vector<Separator> out;

    auto offer = [&](const VertexSet& s) {
        if (!seen.insert(s).second) return;
        Separator sep = analyze_separator(g, s);
        if (!sep.is_minimal()) return;
        out.push_back(std::move(sep));
        if (cap != 0 && out.size() > cap) throw CapacityExceeded("minimal separator enumeration", out.size());
        work.push_back(s);
    };

    for (Vertex v = 0; v < g.n(); ++v) {
        VertexSet rest = ~closed_neighborhood(g, VertexSet::singleton(g.n(), v));
        for (const auto& c : components(g, rest)) offer(open_neighborhood(g, c));
    }
    while (!work.empty()) {
        VertexSet s = std::move(work.front());
        work.pop_front();
        s.for_each([&](Vertex x) {
            VertexSet rest = ~(s | g.neighbors(x));
            for (const auto& c : components(g, rest)) offer(open_neighborhood(g, c));
        });
    }
    std::sort(out.begin(), out.end(), [](const Separator& a, const Separator& b) { return a.set < b.set; });
    return out;
}

/// Test oracle: every subset with at least two full components.
inline std::vector<Separator> brute_force_minimal_separators(const Graph& g, int limit = oracle_limit(kSeparatorOracleLimit)) {
    if (g.n() > limit) throw LimitExceeded("separator oracle limited to " + std::to_string(limit) + " vertices");
    std::vector<Separator> out;
    for (unsigned long long mask = 0; mask < (1ull << g.n()); ++mask) {
        VertexSet s(g.n());
        for (int v = 0; v < g.n(); ++v)
            if (mask >> v & 1u) s.insert(v);
        Separator sep = analyze_separator(g, s);
        if (sep.is_minimal()) out.push_back(std::move(sep));
    }
    std::sort(out.begin(), out.end(), [](const Separator& a, const Separator& b) { return a.set < b.set; });
    return out;
}

/// For a minimal separator S with full component A ∋ v such that no component
/// of g[A] - v sees all of S, returns Z ⊆ A ∩ N[v] with v ∈ Z and S ⊆ N(Z).
///
/// Let S' = S \ N(v). The components of g[A] - v have nested traces on S'
/// in long-hole-free graphs; A1 is the one with the largest trace, and Z is v
/// plus an inclusion-minimal subset of A1 ∩ N(v) dominating S'. `k_bound` > 0
/// additionally requires |Z| <= k_bound.
inline VertexSet special_separator_witness(const Graph& g, const Separator& sep, const VertexSet& a, Vertex v, int k_bound = 0) {
    const VertexSet& s = sep.set;
    if (!sep.is_minimal()) throw PreconditionViolation("separator is not minimal");
    if (!sep.is_full(a)) throw PreconditionViolation("A is not a full component of S");
    if (!a.contains(v)) throw PreconditionViolation("v is not in A");

    VertexSet a_minus_v = a;
    a_minus_v.erase(v);
    auto parts = components(g, a_minus_v);
    for (const auto& part : parts)
        if (s.is_subset_of(open_neighborhood(g, part))) throw PreconditionViolation("a component of A - v sees all of S");

    VertexSet s_far = s - g.neighbors(v);
    VertexSet z(g.n());
    if (!s_far.empty()) {
        std::stable_sort(parts.begin(), parts.end(), [&](const VertexSet& x, const VertexSet& y) {
            return open_neighborhood(g, x).intersection_size(s_far) > open_neighborhood(g, y).intersection_size(s_far);
        });
        z = parts.front() & g.neighbors(v);
        auto covers = [&](const VertexSet& cand) { return s_far.is_subset_of(open_neighborhood(g, cand)); };
        if (!covers(z)) throw WitnessNotFound("N(v) ∩ A1 does not dominate S \\ N(v); graph is not long-hole-free");
        for (Vertex u = z.first(); u >= 0; u = z.next(u + 1)) {
            VertexSet smaller = z;
            smaller.erase(u);
            if (covers(smaller)) z = std::move(smaller);
        }
    }
    z.insert(v);
    if (!s.is_subset_of(open_neighborhood(g, z))) throw WitnessNotFound("witness does not dominate S");
    if (k_bound > 0 && z.size() > k_bound)
        throw WitnessNotFound("witness has " + std::to_string(z.size()) + " vertices, bound is " + std::to_string(k_bound));
    return z;
}

/// Whether S, relative to vertex v, meets the hypotheses of
/// special_separator_witness: v ∉ S, the component A ∋ v is full, and no
/// component of g[A] - v sees all of S.
inline bool is_special(const Graph& g, const Separator& sep, Vertex v) {
    if (!sep.is_minimal() || sep.set.contains(v)) return false;
    const VertexSet* a = nullptr;
    for (const auto& c : sep.components)
        if (c.contains(v)) a = &c;
    if (a == nullptr || !sep.is_full(*a)) return false;
    VertexSet rest = *a;
    rest.erase(v);
    for (const auto& part : components(g, rest))
        if (sep.set.is_subset_of(open_neighborhood(g, part))) return false;
    return true;
}

}  // namespace holefree
