// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "holefree/holefree.hpp"
#include "oracles.hpp"

using namespace holefree;

namespace {

// Pinned limits and corpus sizes.
constexpr double kPrismLawSeconds = 10.0;
constexpr double kEngineSuiteSeconds = 300.0;
constexpr double kSmokeSoftTargetSeconds = 120.0;  // reported, not enforced
constexpr int kSmokeN = 40;
constexpr std::array<double, 3> kSmokeDensities{0.2, 0.5, 0.8};
constexpr int kRandomGraphs = 200;
constexpr int kChordalGraphs = 50;
constexpr int kEngineRandom = 300;
constexpr int kEngineLongHoleFree = 100;
constexpr int kBalancedInstances = 100;
constexpr int kWeightFunctions = 5;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::size_t failures = 0;

    void fail(const std::string& why) {
        if (failures++ < 3) detail << " [" << why << "]";
        pass = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::vector<VertexSet> sorted_sets(std::vector<oracle::Mask> masks, int n) {
    std::vector<VertexSet> out;
    for (auto m : masks) out.push_back(oracle::to_set(m, n));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> sets_of(const std::vector<Separator>& seps) {
    std::vector<VertexSet> out;
    for (const auto& s : seps) out.push_back(s.set);
    return out;
}

std::vector<VertexSet> sets_of(const std::vector<Pmc>& pmcs) {
    std::vector<VertexSet> out;
    for (const auto& p : pmcs) out.push_back(p.set);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> subsets_of(const VertexSet& s) {
    std::vector<Vertex> v = s.to_vector();
    std::vector<VertexSet> out;
    for (std::uint32_t bits = 1; bits < (1u << v.size()); ++bits) {
        VertexSet m(s.capacity());
        for (std::size_t i = 0; i < v.size(); ++i)
            if ((bits >> i) & 1) m.insert(v[i]);
        out.push_back(m);
    }
    return out;
}

// Two vertex-disjoint triangles joined by exactly a perfect matching.
bool has_induced_3_prism(const Graph& g) {
    std::vector<std::array<Vertex, 3>> triangles;
    for (Vertex x = 0; x < g.n(); ++x)
        for (Vertex y = x + 1; y < g.n(); ++y)
            for (Vertex z = y + 1; z < g.n(); ++z)
                if (g.adjacent(x, y) && g.adjacent(y, z) && g.adjacent(x, z)) triangles.push_back({x, y, z});
    for (const auto& t : triangles)
        for (const auto& u : triangles) {
            int cross = 0;
            bool disjoint = true, matching = true;
            std::array<int, 3> deg_t{}, deg_u{};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    if (t[i] == u[j]) disjoint = false;
                    if (t[i] != u[j] && g.adjacent(t[i], u[j])) {
                        ++cross;
                        ++deg_t[i];
                        ++deg_u[j];
                    }
                }
            for (int i = 0; i < 3; ++i) matching = matching && deg_t[i] == 1 && deg_u[i] == 1;
            if (disjoint && cross == 3 && matching) return true;
        }
    return false;
}

// 1. The k-prism has exactly 2^k - 2 minimal separators.
void prism_separator_law(Outcome& o) {
    auto start = std::chrono::steady_clock::now();
    for (int k = 2; k <= 10; ++k) {
        std::size_t got = enumerate_minimal_separators(prism_graph(k)).size();
        std::size_t want = (std::size_t{1} << k) - 2;
        if (got != want) o.fail("k=" + std::to_string(k) + " got " + std::to_string(got));
    }
    double t = seconds_since(start);
    o.detail << " k=2..10, " << t << " s (limit " << kPrismLawSeconds << " s)";
    if (t >= kPrismLawSeconds) o.fail("too slow");
}

// 2. Enumeration equals brute force as set families.
void separator_oracle(Outcome& o) {
    std::size_t compared = 0;
    for (const auto& inst : corpus::random_graphs(kRandomGraphs, 9001, 1, 12)) {
        auto seps = sets_of(enumerate_minimal_separators(inst.g));
        if (seps != sets_of(brute_force_minimal_separators(inst.g))) o.fail(inst.name + " vs brute force");
        if (seps != sorted_sets(oracle::minimal_separators(inst.g), inst.g.n())) o.fail(inst.name + " vs subset oracle");
        compared += seps.size();
    }
    o.detail << " " << kRandomGraphs << " graphs, " << compared << " separators, " << o.failures << " mismatches";
}

// 3. Incremental PMC enumeration equals is_pmc over all subsets; chordal PMCs are the maximal cliques.
void pmc_oracle(Outcome& o) {
    std::size_t compared = 0;
    for (const auto& inst : corpus::random_graphs(kRandomGraphs, 9002, 1, 12)) {
        auto pmcs = sets_of(enumerate_pmcs(inst.g, enumerate_minimal_separators(inst.g)));
        if (pmcs != sorted_sets(oracle::pmcs(inst.g), inst.g.n())) o.fail(inst.name);
        compared += pmcs.size();
    }
    Rng rng(9003);
    for (int i = 0; i < kChordalGraphs; ++i) {
        int n = 1 + static_cast<int>(rng.below(12));
        Graph g = random_chordal(n, static_cast<int>(rng.below(static_cast<std::uint64_t>(3 * n))), rng);
        auto pmcs = sets_of(enumerate_pmcs(g, enumerate_minimal_separators(g)));
        auto bags = clique_tree(g, {}).bags;
        std::sort(bags.begin(), bags.end());
        if (pmcs != bags) o.fail("chordal #" + std::to_string(i) + " vs clique tree");
        if (pmcs != sorted_sets(oracle::maximal_cliques(g), n)) o.fail("chordal #" + std::to_string(i) + " vs cliques");
    }
    o.detail << " " << kRandomGraphs << " random graphs (" << compared << " PMCs), " << kChordalGraphs << " chordal, "
             << o.failures << " mismatches";
}

// 4. Separator count <= n^(k+2) for k = largest prism + 1 (at least 2).
void separator_bound(Outcome& o) {
    auto list = corpus::long_hole_free(200, 9004, 2, 14);
    double worst = 0;
    for (const auto& inst : list) {
        const int k = std::max(2, oracle::largest_prism(inst.g) + 1);
        const double bound = std::pow(static_cast<double>(inst.g.n()), k + 2);
        const double count = static_cast<double>(enumerate_minimal_separators(inst.g).size());
        worst = std::max(worst, count / bound);
        if (count > bound) o.fail(inst.name);
    }
    o.detail << " " << list.size() << " instances, max count/bound " << worst << ", " << o.failures << " violations";
}

// 5. solve_mwis equals brute force with verified witnesses.
void engine_exactness(Outcome& o) {
    auto start = std::chrono::steady_clock::now();
    auto check = [&](const corpus::Instance& inst) {
        SolveResult r = solve_mwis(inst.g);
        SolveResult bf = brute_force_mwis(inst.g);
        if (r.weight != bf.weight) o.fail(inst.name + " value");
        if (!inst.g.is_independent(r.set) || inst.g.total_weight(r.set) != r.weight) o.fail(inst.name + " witness");
        if (bf.weight != oracle::mwis(inst.g).weight) o.fail(inst.name + " brute force vs oracle");
    };
    for (const auto& inst : corpus::random_graphs(kEngineRandom, 9005, 1, 14, true)) check(inst);
    for (const auto& inst : corpus::long_hole_free(kEngineLongHoleFree, 9006, 4, 16, true)) check(inst);
    double t = seconds_since(start);
    o.detail << " " << kEngineRandom << " random + " << kEngineLongHoleFree << " long-hole-free, " << o.failures
             << " mismatches, " << t << " s (limit " << kEngineSuiteSeconds << " s)";
    if (t >= kEngineSuiteSeconds) o.fail("too slow");
}

// 6. Every PMC of a long-hole-free graph is dominated by at most three vertices.
void three_domination(Outcome& o) {
    std::size_t total = 0, fallbacks = 0;
    std::map<std::string, std::size_t> methods;
    for (const auto& inst : corpus::long_hole_free(150, 9007, 2, 12)) {
        const Graph& g = inst.g;
        for (const Pmc& p : enumerate_pmcs(g, enumerate_minimal_separators(g))) {
            ++total;
            try {
                DominationResult r = dominate_pmc(g, p);
                ++methods[to_string(r.method)];
                if (r.method == DominationMethod::BruteFallback) {
                    ++fallbacks;
                    o.fail(inst.name + " fallback");
                }
                if (r.z.size() > 3) o.fail(inst.name + " |Z|>3");
                if (!p.set.is_subset_of(closed_neighborhood(g, r.z))) o.fail(inst.name + " not dominated");
            } catch (const Error& e) {
                o.fail(inst.name + " " + e.what());
            }
        }
    }
    o.detail << " " << total << " PMCs,";
    for (auto& [m, c] : methods) o.detail << " " << m << "=" << c;
    o.detail << ", " << fallbacks << " fallbacks";
}

// 7. Balanced separators of size <= 3(Δ+1) under several weightings.
void balanced_separators(Outcome& o) {
    Rng rng(9008);
    std::size_t runs = 0;
    int largest = 0;
    for (const auto& inst : corpus::connected_long_hole_free(kBalancedInstances, 9009, 3, 14)) {
        const int bound = 3 * (max_degree(inst.g) + 1);
        for (int f = 0; f < kWeightFunctions; ++f) {
            Graph g = inst.g;
            if (f < 4) {
                do g = corpus::weigh(inst.g, rng, f);
                while (g.total_weight().is_zero());
            } else {
                std::vector<Weight> ws;  // heavier on high-degree vertices
                for (Vertex v = 0; v < g.n(); ++v) ws.push_back(Weight::from_integer(g.degree(v) * g.degree(v) + 1));
                g = g.with_weights(ws);
            }
            ++runs;
            try {
                auto r = balanced_separator(g);
                largest = std::max(largest, r.separator.size());
                if (r.degraded) o.fail(inst.name + " degraded");
                if (r.separator.size() > bound) o.fail(inst.name + " size");
                Weight heaviest = oracle::max_component_weight(g, oracle::to_mask(r.separator));
                if (heaviest + heaviest > g.total_weight()) o.fail(inst.name + " unbalanced, weighting " + std::to_string(f));
            } catch (const Error& e) {
                o.fail(inst.name + " " + e.what());
            }
        }
    }
    o.detail << " " << kBalancedInstances << " instances x " << kWeightFunctions << " weightings = " << runs
             << " runs, largest separator " << largest << ", " << o.failures << " violations";
}

// 8. Structural witnesses on every separator and PMC of small instances.
void structural_witnesses(Outcome& o) {
    std::size_t dominated = 0, covers = 0, covering = 0, special = 0, misses = 0;
    auto miss = [&](const std::string& what) {
        ++misses;
        o.fail(what);
    };
    for (const auto& inst : corpus::long_hole_free(150, 9010, 3, 10)) {
        const Graph& g = inst.g;
        const int k = std::max(2, oracle::largest_prism(g) + 1);
        auto seps = enumerate_minimal_separators(g);
        for (const auto& sep : seps) {
            // An independent M ⊆ S is dominated by one vertex of each full component.
            for (const VertexSet& m : subsets_of(sep.set)) {
                if (!g.is_independent(m)) continue;
                for (int i : sep.full) {
                    bool found = false;
                    sep.components[static_cast<std::size_t>(i)].for_each(
                        [&](Vertex x) { found = found || m.is_subset_of(g.neighbors(x)); });
                    ++dominated;
                    if (!found) miss(inst.name + " independent subset undominated");
                }
            }
            // x ∈ S with neighbours a, b in two full components covering S.
            for (int ai : sep.full)
                for (int bi : sep.full) {
                    if (ai == bi) continue;
                    sep.set.for_each([&](Vertex x) {
                        ++covers;
                        try {
                            auto [p, q] = find_xab_cover(g, sep, ai, bi, x);
                            VertexSet cover = g.neighbors(x) | g.neighbors(p) | g.neighbors(q);
                            cover.insert(x);
                            if (!sep.set.is_subset_of(cover) || !g.adjacent(x, p) || !g.adjacent(x, q))
                                miss(inst.name + " bad xab cover");
                        } catch (const WitnessNotFound&) {
                            miss(inst.name + " no xab cover");
                        }
                    });
                }
            // Special vertices give Z with S ⊆ N(Z), |Z| <= k.
            for (int i : sep.full) {
                const VertexSet& comp = sep.components[static_cast<std::size_t>(i)];
                comp.for_each([&](Vertex v) {
                    if (!is_special(g, sep, v)) return;
                    ++special;
                    try {
                        VertexSet z = special_separator_witness(g, sep, comp, v, k);
                        if (!sep.set.is_subset_of(open_neighborhood(g, z)) || z.size() > k) miss(inst.name + " bad special witness");
                    } catch (const WitnessNotFound&) {
                        miss(inst.name + " no special witness");
                    }
                });
            }
        }
        // For v ∈ Ω with Ω ⊄ N[v], a component of G - Ω sees v and all of Ω \ N(v).
        for (const Pmc& p : enumerate_pmcs(g, seps))
            p.set.for_each([&](Vertex v) {
                if (p.set.is_subset_of(closed_neighborhood(g, VertexSet::singleton(g.n(), v)))) return;
                ++covering;
                VertexSet m = p.set - g.neighbors(v);
                auto comp = find_covering_component(g, p, m);
                if (!comp || !m.is_subset_of(open_neighborhood(g, *comp))) miss(inst.name + " no covering component");
            });
    }
    o.detail << " checks: full-component domination " << dominated << ", xab covers " << covers << ", covering components "
             << covering << ", special witnesses " << special << ", " << misses
             << " witness-not-found";
    if (dominated == 0 || covers == 0 || covering == 0 || special == 0) o.fail("a check was never exercised");
}

// 9. All strategies agree where each completes.
void cross_solver(Outcome& o) {
    std::vector<corpus::Instance> list = corpus::random_graphs(150, 9011, 1, 13, true);
    for (auto& inst : corpus::long_hole_free(150, 9012, 4, 16, true)) list.push_back(std::move(inst));
    std::size_t solved = 0, skipped = 0;
    for (const auto& inst : list) {
        std::optional<Weight> reference;
        for (Strategy s : {Strategy::Bt, Strategy::Subexp1, Strategy::Subexp2, Strategy::Brute}) {
            SolverConfig cfg;
            cfg.strategy = s;
            cfg.subexp1_floor = 0;  // exercise the prism branching itself
            try {
                SolveResult r = solve(inst.g, cfg);
                ++solved;
                if (!reference) reference = r.weight;
                if (r.weight != *reference) o.fail(inst.name + " " + to_string(s));
            } catch (const CapacityExceeded&) {
                ++skipped;
            } catch (const LimitExceeded&) {
                ++skipped;
            } catch (const WidthTooLarge&) {
                ++skipped;
            }
        }
    }
    o.detail << " " << list.size() << " instances, " << solved << " runs, " << skipped << " incomplete, " << o.failures
             << " disagreements";
}

// 10. 40-vertex long-hole-free, 3-prism-free instances solve without hitting a cap.
void desk_scale(Outcome& o) {
    Rng rng(9013);
    double slowest = 0;
    for (double density : kSmokeDensities) {
        Graph g = corpus::weigh(grow_long_hole_free(kSmokeN, density, rng, 2), rng, 1);
        const std::string tag = "p=" + std::to_string(density).substr(0, 3);
        if (g.n() != kSmokeN) o.fail(tag + " generator returned " + std::to_string(g.n()) + " vertices");
        if (oracle::has_long_hole(g)) o.fail(tag + " instance has a long hole");
        if (has_induced_3_prism(g)) o.fail(tag + " instance has a 3-prism");
        auto start = std::chrono::steady_clock::now();
        try {
            SolveResult r = solve_kprism_alg(g);
            double t = seconds_since(start);
            slowest = std::max(slowest, t);
            if (r.weight != oracle::mwis_branching(g)) o.fail(tag + " value differs from branching oracle");
            o.detail << " " << tag << ": m=" << g.edge_count() << " minseps " << r.stats.minseps << " pmcs " << r.stats.pmcs
                     << ";";
        } catch (const CapacityExceeded& e) {
            o.fail(tag + " capacity exceeded: " + e.what());
        }
    }
    o.detail << " slowest " << slowest << " s (soft target " << kSmokeSoftTargetSeconds << " s"
             << (slowest < kSmokeSoftTargetSeconds ? ", met" : ", missed") << ")";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Outcome&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "prism separator law", prism_separator_law},
        {2, "separator oracle equivalence", separator_oracle},
        {3, "PMC oracle equivalence", pmc_oracle},
        {4, "separator count bound", separator_bound},
        {5, "engine exactness", engine_exactness},
        {6, "PMC 3-domination", three_domination},
        {7, "balanced separators", balanced_separators},
        {8, "structural witnesses", structural_witnesses},
        {9, "cross-solver agreement", cross_solver},
        {10, "desk-scale smoke", desk_scale},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failed += !o.pass;
        std::printf("%s %2d %s:%s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.str().c_str(),
                    seconds_since(start));
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
