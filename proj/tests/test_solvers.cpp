#include <gtest/gtest.h>

#include "corpus.hpp"
#include "holefree/generators.hpp"
#include "holefree/solvers.hpp"
#include "oracles.hpp"

using namespace holefree;

namespace {

VertexSet vs(int n, std::initializer_list<Vertex> xs) { return VertexSet(n, xs); }

Graph weighted(const Graph& g, std::initializer_list<int> w) {
    std::vector<Weight> ws;
    for (int x : w) ws.push_back(Weight::from_integer(x));
    return g.with_weights(ws);
}

SolverConfig with(Strategy s, int floor = 0) {
    SolverConfig cfg;
    cfg.strategy = s;
    cfg.subexp1_floor = floor;
    return cfg;
}

// Half the total, compared without leaving integer units: 2·w <= total.
bool at_most_half(Weight w, Weight total) { return w + w <= total; }

}  // namespace

TEST(Strategy, Names) {
    for (Strategy s : {Strategy::Bt, Strategy::Subexp1, Strategy::Subexp2, Strategy::Brute, Strategy::Auto})
        EXPECT_EQ(parse_strategy(to_string(s)), s);
    EXPECT_FALSE(parse_strategy("fast").has_value());
}

TEST(SolveKprismAlg, Examples) {
    EXPECT_EQ(solve_kprism_alg(cycle_graph(6)).weight, Weight::from_integer(3));
    Graph prism = weighted(prism_graph(3), {3, 1, 1, 1, 1, 3});
    EXPECT_EQ(solve_kprism_alg(prism).weight, Weight::from_integer(6));
}

TEST(SolveKprismAlg, ThirtyVertexInstancesMatchBranching) {
    Rng rng(30);
    for (int i = 0; i < 4; ++i) {
        Graph g = corpus::weigh(grow_long_hole_free(30, 0.25, rng, 3), rng, i);
        ASSERT_FALSE(oracle::has_long_hole(g));
        EXPECT_EQ(solve_kprism_alg(g).weight, oracle::mwis_branching(g)) << "instance " << i;
    }
}

TEST(SolveSubexp1, Examples) {
    EXPECT_EQ(solve_subexp1(prism_graph(3), with(Strategy::Subexp1)).weight, Weight::from_integer(2));
    SolveResult c4 = solve_subexp1(cycle_graph(4), with(Strategy::Subexp1));
    EXPECT_EQ(c4.weight, Weight::from_integer(2));
    EXPECT_GT(c4.stats.branches, 0u);
    // The default floor hands small graphs to brute force.
    EXPECT_EQ(solve_subexp1(cycle_graph(4)).stats.branches, 0u);
}

TEST(SolveSubexp1, MatchesBruteForce) {
    for (const auto& inst : corpus::long_hole_free(80, 2101, 4, 16, true))
        EXPECT_EQ(solve_subexp1(inst.g, with(Strategy::Subexp1)).weight, brute_force_mwis(inst.g).weight) << inst.name;
    for (const auto& inst : corpus::random_graphs(80, 2102, 1, 14, true))
        EXPECT_EQ(solve_subexp1(inst.g, with(Strategy::Subexp1)).weight, brute_force_mwis(inst.g).weight) << inst.name;
}

TEST(BalancedSeparator, Examples) {
    Graph p5 = path_graph(5);
    auto r = balanced_separator(p5);
    EXPECT_TRUE(r.bag == vs(5, {1, 2}) || r.bag == vs(5, {2, 3}));
    EXPECT_EQ(r.z.size(), 1);
    EXPECT_FALSE(r.degraded);
    EXPECT_LE(r.max_component_weight, Weight::from_integer(2));

    Graph star = star_graph(5);
    r = balanced_separator(star);
    EXPECT_EQ(r.bag.size(), 2);
    EXPECT_TRUE(r.bag.contains(0));
    EXPECT_LE(r.max_component_weight, Weight::from_integer(3));

    Graph c4 = cycle_graph(4);
    r = balanced_separator(c4);
    EXPECT_EQ(r.bag.size(), 3);
    EXPECT_EQ(r.z.size(), 1);
    EXPECT_EQ(r.separator.size(), 3);
    EXPECT_LE(r.separator.size(), 9);
}

TEST(BalancedSeparator, Preconditions) {
    EXPECT_THROW(balanced_separator(Graph(2, {})), PreconditionViolation);
    EXPECT_THROW(balanced_separator(Graph(0, {})), PreconditionViolation);
    EXPECT_THROW(balanced_separator(weighted(path_graph(2), {0, 0})), PreconditionViolation);
}

TEST(BalancedSeparator, BoundsUnderSeveralWeightings) {
    Rng rng(41);
    std::size_t checked = 0;
    for (const auto& inst : corpus::connected_long_hole_free(60, 2201, 3, 14)) {
        const int bound = 3 * (max_degree(inst.g) + 1);
        for (int mode = 0; mode < 5; ++mode) {
            Graph g = mode < 4 ? corpus::weigh(inst.g, rng, mode) : inst.g;
            if (g.total_weight().is_zero()) continue;
            auto r = balanced_separator(g);
            ++checked;
            EXPECT_FALSE(r.degraded) << inst.name;
            EXPECT_LE(r.z.size(), 3) << inst.name;
            EXPECT_LE(r.separator.size(), bound) << inst.name;
            EXPECT_EQ(r.max_component_weight, oracle::max_component_weight(g, oracle::to_mask(r.separator)));
            EXPECT_TRUE(at_most_half(r.max_component_weight, g.total_weight())) << inst.name << " mode " << mode;
            EXPECT_TRUE(at_most_half(max_component_weight(g, r.bag), g.total_weight())) << inst.name;
        }
    }
    EXPECT_GT(checked, 200u);
}

TEST(BalancedSeparator, DegradesOnLongHoles) {
    // C8 has PMCs no three vertices dominate; the result stays balanced.
    for (int n : {6, 7, 8, 9, 10}) {
        Graph g = cycle_graph(n);
        auto r = balanced_separator(g);
        EXPECT_TRUE(at_most_half(r.max_component_weight, g.total_weight())) << "C" << n;
        if (r.degraded) {
            EXPECT_TRUE(r.z.empty());
            EXPECT_EQ(r.separator, r.bag);
        }
    }
}

TEST(BuildTreeDecomposition, Examples) {
    TreeDecomposition p8 = build_tree_decomposition(path_graph(8));
    EXPECT_TRUE(oracle::valid_decomposition(path_graph(8), p8.bags, p8.edges));
    EXPECT_LE(p8.width(), 2);

    TreeDecomposition c6 = build_tree_decomposition(cycle_graph(6));
    EXPECT_TRUE(oracle::valid_decomposition(cycle_graph(6), c6.bags, c6.edges));
    EXPECT_LE(c6.width(), 8);

    TreeDecomposition k5 = build_tree_decomposition(complete_graph(5));
    ASSERT_EQ(k5.bags.size(), 1u);
    EXPECT_EQ(k5.width(), 4);

    TreeDecomposition empty = build_tree_decomposition(Graph(0, {}));
    EXPECT_TRUE(empty.bags.empty());
}

TEST(BuildTreeDecomposition, ValidAndNarrow) {
    for (const auto& inst : corpus::long_hole_free(120, 2301, 1, 16)) {
        TreeDecomposition td = build_tree_decomposition(inst.g);
        EXPECT_TRUE(oracle::valid_decomposition(inst.g, td.bags, td.edges)) << inst.name;
        EXPECT_LE(td.width(), 9 * (max_degree(inst.g) + 1)) << inst.name;
    }
    for (const auto& inst : corpus::random_graphs(80, 2302, 1, 14)) {
        TreeDecomposition td = build_tree_decomposition(inst.g);
        EXPECT_TRUE(oracle::valid_decomposition(inst.g, td.bags, td.edges)) << inst.name;
    }
}

TEST(IsValidTreeDecomposition, AgreesWithOracle) {
    Graph c4 = cycle_graph(4);
    TreeDecomposition good{{vs(4, {0, 1, 2}), vs(4, {0, 2, 3})}, {{0, 1}}};
    EXPECT_TRUE(is_valid_tree_decomposition(c4, good));
    TreeDecomposition missing_edge{{vs(4, {0, 1, 2}), vs(4, {1, 2, 3})}, {{0, 1}}};
    EXPECT_FALSE(is_valid_tree_decomposition(c4, missing_edge));
    TreeDecomposition broken{{vs(4, {0, 1}), vs(4, {1, 2}), vs(4, {2, 3}), vs(4, {3, 0})}, {{0, 1}, {1, 2}, {2, 3}}};
    EXPECT_FALSE(is_valid_tree_decomposition(c4, broken));
    EXPECT_FALSE(oracle::valid_decomposition(c4, broken.bags, broken.edges));
    TreeDecomposition cyclic{{vs(4, {0, 1, 2}), vs(4, {0, 2, 3}), vs(4, {0, 2})}, {{0, 1}, {1, 2}, {0, 2}}};
    EXPECT_FALSE(is_valid_tree_decomposition(c4, cyclic));
}

TEST(SolveTreewidthDp, Examples) {
    Graph p4 = weighted(path_graph(4), {1, 5, 5, 1});
    TreeDecomposition path{{vs(4, {0, 1}), vs(4, {1, 2}), vs(4, {2, 3})}, {{0, 1}, {1, 2}}};
    EXPECT_EQ(solve_treewidth_dp(p4, path).weight, Weight::from_integer(6));

    Graph c4 = cycle_graph(4);
    TreeDecomposition two{{vs(4, {0, 1, 2}), vs(4, {0, 2, 3})}, {{0, 1}}};
    EXPECT_EQ(solve_treewidth_dp(c4, two).weight, Weight::from_integer(2));

    Graph k4 = weighted(complete_graph(4), {1, 2, 3, 4});
    TreeDecomposition one{{k4.all()}, {}};
    SolveResult r = solve_treewidth_dp(k4, one);
    EXPECT_EQ(r.weight, Weight::from_integer(4));
    EXPECT_EQ(r.set, vs(4, {3}));
    EXPECT_THROW(solve_treewidth_dp(k4, one, 3), WidthTooLarge);
}

TEST(SolveTreewidthDp, MatchesOracle) {
    for (const auto& inst : corpus::random_graphs(150, 2401, 1, 14, true)) {
        TreeDecomposition td = build_tree_decomposition(inst.g);
        SolveResult r = solve_treewidth_dp(inst.g, td);
        EXPECT_EQ(r.weight, oracle::mwis(inst.g).weight) << inst.name;
        EXPECT_TRUE(inst.g.is_independent(r.set));
        EXPECT_EQ(inst.g.total_weight(r.set), r.weight);
    }
}

TEST(SolveSubexp2, Examples) {
    EXPECT_EQ(degree_threshold(9), 5);  // ⌈√(9 ln 9)⌉ = ⌈4.44⌉
    EXPECT_EQ(degree_threshold(1), 1);
    SolveResult star = solve_subexp2(star_graph(8));
    EXPECT_EQ(star.weight, Weight::from_integer(8));
    EXPECT_EQ(star.set, star_graph(8).all() - VertexSet::singleton(9, 0));
    EXPECT_GT(star.stats.branches, 0u);
    EXPECT_EQ(solve_subexp2(cycle_graph(6)).weight, Weight::from_integer(3));
}

TEST(SolveSubexp2, MatchesBruteForce) {
    for (const auto& inst : corpus::long_hole_free(80, 2501, 4, 16, true))
        EXPECT_EQ(solve_subexp2(inst.g).weight, brute_force_mwis(inst.g).weight) << inst.name;
    for (const auto& inst : corpus::random_graphs(80, 2502, 1, 14, true))
        EXPECT_EQ(solve_subexp2(inst.g).weight, brute_force_mwis(inst.g).weight) << inst.name;
}

TEST(Solve, CrossSolverAgreement) {
    auto check = [](const corpus::Instance& inst) {
        Weight expected = oracle::mwis(inst.g).weight;
        for (Strategy s : {Strategy::Bt, Strategy::Subexp1, Strategy::Subexp2, Strategy::Brute, Strategy::Auto}) {
            SolveResult r = solve(inst.g, with(s));
            EXPECT_EQ(r.weight, expected) << inst.name << " " << to_string(s);
            EXPECT_TRUE(inst.g.is_independent(r.set));
        }
    };
    for (const auto& inst : corpus::random_graphs(100, 2601, 1, 13, true)) check(inst);
    for (const auto& inst : corpus::long_hole_free(100, 2602, 4, 16, true)) check(inst);
}

TEST(Solve, AutoFallsBackOnCapacity) {
    SolverConfig cfg;
    cfg.cap_separators = 3;
    SolveResult r = solve(prism_graph(4), cfg);
    EXPECT_EQ(r.weight, Weight::from_integer(2));
    EXPECT_EQ(r.strategy, "subexp1");
    cfg.strategy = Strategy::Bt;
    EXPECT_THROW(solve(prism_graph(4), cfg), CapacityExceeded);
}

TEST(SolveCanonical, LexSmallestOptimum) {
    SolveResult c4 = solve_canonical(cycle_graph(4));
    EXPECT_EQ(c4.set, vs(4, {0, 2}));
    for (const auto& inst : corpus::random_graphs(100, 2701, 1, 12, true)) {
        oracle::Optimum best = oracle::mwis(inst.g);
        SolveResult r = solve_canonical(inst.g);
        EXPECT_EQ(r.weight, best.weight);
        EXPECT_EQ(r.set, oracle::to_set(best.set, inst.g.n())) << inst.name;
    }
}

TEST(SolveMwcComplement, Examples) {
    EXPECT_EQ(solve_mwc_complement(prism_graph(3)).weight, Weight::from_integer(3));
    EXPECT_EQ(solve(cycle_graph(6)).weight, Weight::from_integer(3));
    SolveResult k4 = solve_mwc_complement(weighted(complete_graph(4), {1, 2, 3, 4}));
    EXPECT_EQ(k4.weight, Weight::from_integer(10));
    EXPECT_EQ(k4.set, complete_graph(4).all());
    EXPECT_EQ(solve_mwc_complement(cycle_graph(5)).weight, Weight::from_integer(2));
}

TEST(SolveMwcComplement, MatchesCliqueOracle) {
    for (const auto& inst : corpus::random_graphs(150, 2801, 1, 14, true)) {
        SolveResult r = solve_mwc_complement(inst.g);
        EXPECT_EQ(r.weight, oracle::max_weight_clique(inst.g).weight) << inst.name;
        EXPECT_TRUE(inst.g.is_clique(r.set));
    }
}
