#pragma once

// Seeded instance generators. All randomness comes from std::mt19937_64,
// whose output sequence is fixed by the standard, and is mapped to ranges by
// hand so that a seed yields the same graph on every platform.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "holefree/error.hpp"
#include "holefree/graph.hpp"
#include "holefree/recognition.hpp"

namespace holefree {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform-ish integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : engine_() % bound; }
    /// Uniform double in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

/// The k-prism: a_i = i, b_i = k + i.
inline Graph prism_graph(int k) {
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            edges.emplace_back(i, j);
            edges.emplace_back(k + i, k + j);
        }
    for (int i = 0; i < k; ++i) edges.emplace_back(i, k + i);
    return Graph(2 * k, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph(n, edges);
}

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

/// Star with center 0 and `leaves` leaves.
inline Graph star_graph(int leaves) {
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph(leaves + 1, edges);
}

inline Graph random_graph(int n, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(p)) edges.emplace_back(i, j);
    return Graph(n, edges);
}

/// Random chordal graph with n vertices and about m edges (exactly m whenever
/// the construction allows it). Vertex i attaches to a subset of the clique
/// formed by a random earlier vertex u and u's own attachment, so the reverse
/// insertion order is a perfect elimination order.
inline Graph random_chordal(int n, int m, Rng& rng) {
    if (n < 0 || m < 0) throw PreconditionViolation("chordal generator needs n, m >= 0");
    std::vector<std::vector<Vertex>> attach(static_cast<std::size_t>(n));
    std::vector<Edge> edges;
    long long budget = m;
    for (int i = 1; i < n; ++i) {
        long long remaining = n - i;
        long long want = (budget + remaining - 1) / remaining;
        if (want <= 0) continue;
        auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(i)));
        std::vector<Vertex> clique = attach[static_cast<std::size_t>(u)];
        // Random order, u first.
        for (std::size_t j = clique.size(); j > 1; --j) std::swap(clique[j - 1], clique[rng.below(j)]);
        clique.insert(clique.begin(), u);
        long long take = std::min<long long>(want, static_cast<long long>(clique.size()));
        clique.resize(static_cast<std::size_t>(take));
        std::sort(clique.begin(), clique.end());
        for (Vertex v : clique) edges.emplace_back(v, i);
        attach[static_cast<std::size_t>(i)] = clique;
        budget -= take;
    }
    return Graph(n, edges);
}

/// Erdős–Rényi samples until one is long-hole-free; throws after
/// `max_tries` failures.
inline Graph random_long_hole_free(int n, double p, Rng& rng, int max_tries = 10000) {
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        Graph g = random_graph(n, p, rng);
        if (!find_long_hole(g)) return g;
    }
    throw Error("lhf-filter: no long-hole-free sample within " + std::to_string(max_tries) + " tries");
}

/// Grows a long-hole-free graph one vertex at a time: each new vertex gets a
/// random neighbourhood (edge probability p), resampled until no long hole
/// appears and, when max_prism > 0, no (max_prism + 1)-prism appears either.
inline Graph grow_long_hole_free(int n, double p, Rng& rng, int max_prism = 0, int tries_per_vertex = 200) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        bool placed = false;
        for (int t = 0; t < tries_per_vertex && !placed; ++t) {
            std::vector<Edge> trial = edges;
            for (int j = 0; j < i; ++j)
                if (rng.chance(p)) trial.emplace_back(j, i);
            Graph g(i + 1, trial);
            if (find_long_hole(g)) continue;
            if (max_prism > 0 && find_k_prism(g, max_prism + 1)) continue;
            edges = std::move(trial);
            placed = true;
        }
        // An isolated vertex never creates a hole or a prism.
    }
    return Graph(n, edges);
}

/// Weights drawn from {1, ..., max_weight}, or with up to two decimals when
/// `fractional` is set.
inline Graph with_random_weights(const Graph& g, Rng& rng, int max_weight = 10, bool fractional = false) {
    std::vector<Weight> w;
    for (int v = 0; v < g.n(); ++v) {
        std::int64_t units = (1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_weight)))) * Weight::kScale;
        if (fractional) units += static_cast<std::int64_t>(rng.below(100)) * (Weight::kScale / 100);
        w.push_back(Weight::from_units(units));
    }
    return g.with_weights(std::move(w));
}

}  // namespace holefree
