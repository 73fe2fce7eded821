#pragma once

// The holefree command-line front end. run_cli() does all the work and
// writes to the given streams, so tests can drive it in-process.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "holefree/holefree.hpp"

namespace holefree::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kCapacity = 3, kWitness = 4 };

using Json = nlohmann::ordered_json;

namespace detail {

inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_graph(in);
}

inline std::vector<int> one_indexed(const VertexSet& s) {
    std::vector<int> out;
    s.for_each([&](Vertex v) { out.push_back(v + 1); });
    return out;
}

inline std::string join(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
    return out;
}

// Integral weights print as JSON integers, others as doubles.
inline Json weight_json(Weight w) {
    if (w.units() % Weight::kScale == 0) return w.units() / Weight::kScale;
    return w.to_double();
}

// n^e, saturating at the largest uint64.
inline std::uint64_t power_bound(std::uint64_t n, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (n != 0 && r > std::numeric_limits<std::uint64_t>::max() / n) return std::numeric_limits<std::uint64_t>::max();
        r *= n;
    }
    return r;
}

inline Json skeleton(const std::string& command, const std::string& input) {
    Json j;
    j["version"] = kVersion;
    j["command"] = command;
    j["input"] = input;
    j["result"] = {{"weight", nullptr}, {"vertices", Json::array()}, {"strategy", nullptr}};
    j["verdicts"] = {{"long_hole_free", nullptr}, {"largest_prism", nullptr}, {"chordal", nullptr}};
    j["analysis"] = {{"minseps", nullptr},
                     {"pmcs", nullptr},
                     {"dom_histogram", nullptr},
                     {"balanced_separator", {{"bag_size", nullptr}, {"z_size", nullptr}, {"sep_size", nullptr}, {"bound", nullptr}}}};
    j["stats"] = {{"time_ms", 0}, {"table_entries", 0}};
    return j;
}

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool enabled = false;
    // Wall time is omitted unless asked for, so that reports stay byte-identical.
    Json ms() const {
        if (!enabled) return 0;
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
};

struct SolveOptions {
    std::string file;
    std::string strategy = "auto";
    std::size_t cap_seps = 0;
    std::size_t cap_pmcs = 0;
    bool json = false;
    bool timing = false;
    bool clique = false;
    bool any_witness = false;
};

inline int cmd_solve(const SolveOptions& o, std::ostream& out) {
    Clock clock{std::chrono::steady_clock::now(), o.timing};
    Graph g = read_graph_file(o.file);
    SolverConfig cfg;
    cfg.strategy = *parse_strategy(o.strategy);
    cfg.cap_separators = o.cap_seps;
    cfg.cap_pmcs = o.cap_pmcs;
    const Graph& target = o.clique ? complement(g) : g;
    SolveResult r = o.any_witness ? solve(target, cfg) : solve_canonical(target, cfg);
    check_solution(target, r);
    if (o.clique && !g.is_clique(r.set)) throw WitnessNotFound("complement solution is not a clique");

    auto verts = one_indexed(r.set);
    if (o.json) {
        Json j = skeleton("solve", o.file);
        j["result"]["weight"] = weight_json(r.weight);
        j["result"]["weight_text"] = r.weight.to_string();
        j["result"]["vertices"] = verts;
        j["result"]["strategy"] = r.strategy;
        j["result"]["objective"] = o.clique ? "clique" : "independent-set";
        j["stats"]["time_ms"] = clock.ms();
        j["stats"]["table_entries"] = r.stats.table_entries;
        j["stats"]["minseps"] = r.stats.minseps;
        j["stats"]["pmcs"] = r.stats.pmcs;
        j["stats"]["blocks"] = r.stats.blocks;
        j["stats"]["branches"] = r.stats.branches;
        out << j.dump(2) << '\n';
    } else {
        out << "weight: " << r.weight << '\n'
            << "vertices: " << join(verts) << '\n'
            << "strategy: " << r.strategy << '\n'
            << "minseps: " << r.stats.minseps << '\n'
            << "pmcs: " << r.stats.pmcs << '\n'
            << "table_entries: " << r.stats.table_entries << '\n';
        if (o.timing) out << "time_ms: " << clock.ms().dump() << '\n';
    }
    return kOk;
}

struct VerifyOptions {
    std::string file;
    int max_k = 8;
    bool json = false;
};

inline int cmd_verify(const VerifyOptions& o, std::ostream& out) {
    Graph g = read_graph_file(o.file);
    auto hole = find_long_hole(g);
    int prism = largest_prism(g, o.max_k);
    ChordalityResult ch = is_chordal(g);

    // Certificate starts at its smallest vertex and continues to the smaller neighbour.
    std::vector<int> cert;
    if (hole) {
        std::vector<Vertex> c = *hole;
        std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
        if (c.size() > 2 && c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
        for (Vertex v : c) cert.push_back(v + 1);
    }
    if (o.json) {
        Json j = skeleton("verify", o.file);
        j["verdicts"]["long_hole_free"] = !hole.has_value();
        j["verdicts"]["largest_prism"] = prism;
        j["verdicts"]["chordal"] = ch.chordal;
        j["verdicts"]["long_hole"] = hole ? Json(cert) : Json(nullptr);
        j["verdicts"]["max_k"] = o.max_k;
        out << j.dump(2) << '\n';
    } else {
        out << "long-hole-free: " << (hole ? "false" : "true") << '\n';
        if (hole) out << "certificate: " << join(cert) << '\n';
        out << "largest prism: " << prism << (prism == o.max_k ? " (search limit)" : "") << '\n'
            << "chordal: " << (ch.chordal ? "true" : "false") << '\n';
    }
    return kOk;
}

struct AnalyzeOptions {
    std::string file;
    std::size_t cap_seps = 0;
    std::size_t cap_pmcs = 0;
    bool json = false;
};

inline int cmd_analyze(const AnalyzeOptions& o, std::ostream& out) {
    Graph g = read_graph_file(o.file);
    const int n = g.n();
    auto seps = enumerate_minimal_separators(g, o.cap_seps);
    auto pmcs = enumerate_pmcs(g, seps, PmcMode::Incremental, {o.cap_pmcs, o.cap_seps});
    const bool lhf = !find_long_hole(g);
    const int prism = largest_prism(g);
    // g is k-prism-free for k = largest prism + 1; the bound needs k >= 2.
    const int k = std::max(2, prism + 1);
    const std::uint64_t sep_bound = power_bound(static_cast<std::uint64_t>(n), k + 2);

    std::map<std::string, std::size_t> methods{{"single-vertex", 0}, {"lemma-chain", 0}, {"brute-fallback", 0}, {"none", 0}};
    std::map<std::size_t, std::size_t> z_sizes;
    for (const Pmc& p : pmcs) {
        try {
            DominationResult d = dominate_pmc(g, p);
            ++methods[to_string(d.method)];
            ++z_sizes[d.z.size()];
        } catch (const NoDomination&) {
            ++methods["none"];
        }
    }

    // Balanced separator of the largest component (ties: smallest first vertex).
    std::optional<BalancedSeparatorResult> bal;
    int delta = max_degree(g);
    Weight comp_total;
    if (n > 0) {
        VertexSet best;
        for (const VertexSet& c : components(g))
            if (best.capacity() == 0 || c.size() > best.size()) best = c;
        auto sub = induced_subgraph(g, best);
        if (!sub.graph.total_weight().is_zero()) {
            bal = balanced_separator(sub.graph);
            bal->bag = sub.lift(bal->bag, n);
            bal->z = sub.lift(bal->z, n);
            bal->separator = sub.lift(bal->separator, n);
            comp_total = sub.graph.total_weight();
        }
    }
    const int bal_bound = 3 * (delta + 1);

    if (o.json) {
        Json j = skeleton("analyze", o.file);
        j["verdicts"]["long_hole_free"] = lhf;
        j["verdicts"]["largest_prism"] = prism;
        j["verdicts"]["chordal"] = is_chordal(g).chordal;
        j["analysis"]["minseps"] = seps.size();
        j["analysis"]["minseps_bound"] = sep_bound;
        j["analysis"]["minseps_bound_k"] = k;
        j["analysis"]["minseps_bound_ok"] = !lhf || seps.size() <= sep_bound;
        j["analysis"]["pmcs"] = pmcs.size();
        Json hist = Json::object();
        for (auto& [m, c] : methods) hist[m] = c;
        j["analysis"]["dom_histogram"] = hist;
        Json zs = Json::object();
        for (auto& [s, c] : z_sizes) zs[std::to_string(s)] = c;
        j["analysis"]["dom_z_sizes"] = zs;
        Json& b = j["analysis"]["balanced_separator"];
        b["bound"] = bal_bound;
        if (bal) {
            b["bag_size"] = bal->bag.size();
            b["z_size"] = bal->z.size();
            b["sep_size"] = bal->separator.size();
            b["max_component_weight"] = weight_json(bal->max_component_weight);
            b["component_total_weight"] = weight_json(comp_total);
            b["method"] = to_string(bal->method);
            b["ok"] = bal->separator.size() <= bal_bound && !(comp_total < bal->max_component_weight * 2);
        }
        out << j.dump(2) << '\n';
    } else {
        out << "n: " << n << '\n'
            << "long-hole-free: " << (lhf ? "true" : "false") << '\n'
            << "largest prism: " << prism << '\n'
            << "minseps: " << seps.size() << " bound n^" << k + 2 << " = " << sep_bound << ' '
            << (!lhf ? "n/a" : seps.size() <= sep_bound ? "pass" : "FAIL") << '\n'
            << "pmcs: " << pmcs.size() << '\n';
        for (auto& [m, c] : methods) out << "dominated " << m << ": " << c << '\n';
        for (auto& [s, c] : z_sizes) out << "dominated by " << s << " vertices: " << c << '\n';
        if (bal)
            out << "balanced separator: |bag| " << bal->bag.size() << " |Z| " << bal->z.size() << " |N[Z]| "
                << bal->separator.size() << " bound 3(D+1) = " << bal_bound << ' '
                << (bal->separator.size() <= bal_bound ? "pass" : "FAIL") << '\n';
    }
    return kOk;
}

struct GenerateOptions {
    std::string family;
    std::vector<std::string> params;
    std::uint64_t seed = 1;
    std::string out_file;
    int max_prism = 0;
    int tries = 10000;
};

inline int parse_int(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw PreconditionViolation(std::string("invalid ") + what + " '" + s + "'");
}

inline double parse_prob(const std::string& s) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used == s.size() && v >= 0.0 && v <= 1.0) return v;
    } catch (const std::exception&) {
    }
    throw PreconditionViolation("invalid probability '" + s + "'");
}

inline int cmd_generate(const GenerateOptions& o, std::ostream& out) {
    auto need = [&](std::size_t count, const char* usage) {
        if (o.params.size() != count) throw PreconditionViolation(std::string("usage: generate ") + usage);
    };
    std::string cmdline = "holefree generate " + o.family;
    for (const auto& p : o.params) cmdline += " " + p;
    Rng rng(o.seed);
    Graph g(0, {});
    std::vector<std::string> comments;

    if (o.family == "prism") {
        need(1, "prism K");
        int k = parse_int(o.params[0], "k");
        if (k < 1) throw PreconditionViolation("prism size must be at least 1");
        g = prism_graph(k);
        comments.push_back(cmdline);
    } else if (o.family == "chordal") {
        need(2, "chordal N M");
        int n = parse_int(o.params[0], "n"), m = parse_int(o.params[1], "m");
        if (n < 0 || m < 0) throw PreconditionViolation("chordal needs n, m >= 0");
        g = random_chordal(n, m, rng);
        comments.push_back(cmdline + " --seed " + std::to_string(o.seed));
    } else if (o.family == "lhf-filter") {
        need(2, "lhf-filter N P");
        int n = parse_int(o.params[0], "n");
        if (n < 0) throw PreconditionViolation("n must be >= 0");
        g = random_long_hole_free(n, parse_prob(o.params[1]), rng, o.tries);
        comments.push_back(cmdline + " --seed " + std::to_string(o.seed) + " --tries " + std::to_string(o.tries));
    } else if (o.family == "lhf-grow") {
        need(2, "lhf-grow N P");
        int n = parse_int(o.params[0], "n");
        if (n < 0) throw PreconditionViolation("n must be >= 0");
        g = grow_long_hole_free(n, parse_prob(o.params[1]), rng, o.max_prism);
        comments.push_back(cmdline + " --seed " + std::to_string(o.seed) + " --max-prism " + std::to_string(o.max_prism));
    } else if (o.family == "complement-of") {
        need(1, "complement-of FILE");
        g = complement(read_graph_file(o.params[0]));
        comments.push_back(cmdline);
    } else {
        throw PreconditionViolation("unknown family '" + o.family + "' (prism, chordal, lhf-filter, lhf-grow, complement-of)");
    }
    comments.push_back("seed " + std::to_string(o.seed));

    std::string text = emit_graph(g, comments);
    if (o.out_file.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out_file);
        if (!f) throw Error("cannot write '" + o.out_file + "'");
        f << text;
    }
    return kOk;
}

struct BenchOptions {
    std::string file;
    bool json = false;
    bool timing = false;
};

/// Runs every strategy on one instance and reports value and time for each.
inline int cmd_bench(const BenchOptions& o, std::ostream& out) {
    Graph g = read_graph_file(o.file);
    Json rows = Json::array();
    std::optional<Weight> reference;
    bool agree = true;
    for (Strategy s : {Strategy::Bt, Strategy::Subexp1, Strategy::Subexp2, Strategy::Brute}) {
        SolverConfig cfg;
        cfg.strategy = s;
        Json row{{"strategy", to_string(s)}};
        Clock clock{std::chrono::steady_clock::now(), o.timing};
        try {
            SolveResult r = solve(g, cfg);
            row["weight"] = weight_json(r.weight);
            row["status"] = "ok";
            if (reference && *reference != r.weight) agree = false;
            if (!reference) reference = r.weight;
        } catch (const Error& e) {
            row["weight"] = nullptr;
            row["status"] = e.what();
        }
        row["time_ms"] = clock.ms();
        rows.push_back(row);
    }
    if (o.json) {
        Json j{{"version", kVersion}, {"command", "bench"}, {"input", o.file}, {"runs", rows}, {"agree", agree}};
        out << j.dump(2) << '\n';
    } else {
        for (const auto& r : rows)
        {
            out << r["strategy"].get<std::string>() << ": " << r["weight"].dump() << " (" << r["status"].get<std::string>();
            if (o.timing) out << ", " << r["time_ms"].dump() << " ms";
            out << ")\n";
        }
        out << "agree: " << (agree ? "true" : "false") << '\n';
    }
    return agree ? kOk : kWitness;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact maximum weight independent set on long-hole-free graphs"};
    app.name("holefree");
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    detail::SolveOptions so;
    auto* solve_cmd = app.add_subcommand("solve", "Maximum weight independent set (or clique with --clique)");
    solve_cmd->add_option("file", so.file, "Graph file")->required();
    solve_cmd->add_option("--strategy", so.strategy, "auto, bt, subexp1, subexp2 or brute")
        ->check(CLI::IsMember({"auto", "bt", "subexp1", "subexp2", "brute"}));
    solve_cmd->add_option("--cap-seps", so.cap_seps, "Cap on minimal separators (0 = none)");
    solve_cmd->add_option("--cap-pmcs", so.cap_pmcs, "Cap on potential maximal cliques (0 = none)");
    solve_cmd->add_flag("--json", so.json, "JSON report");
    solve_cmd->add_flag("--timing", so.timing, "Report wall time");
    solve_cmd->add_flag("--clique", so.clique, "Maximum weight clique via the complement");
    solve_cmd->add_flag("--any-witness", so.any_witness, "Skip the lexicographically smallest witness search");

    detail::VerifyOptions vo;
    auto* verify_cmd = app.add_subcommand("verify", "Long-hole-freeness, largest prism, chordality");
    verify_cmd->add_option("file", vo.file, "Graph file")->required();
    verify_cmd->add_option("--max-k", vo.max_k, "Largest prism size to search for")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--json", vo.json, "JSON report");

    detail::AnalyzeOptions ao;
    auto* analyze_cmd = app.add_subcommand("analyze", "Separator, PMC, domination and balanced-separator statistics");
    analyze_cmd->add_option("file", ao.file, "Graph file")->required();
    analyze_cmd->add_option("--cap-seps", ao.cap_seps, "Cap on minimal separators (0 = none)");
    analyze_cmd->add_option("--cap-pmcs", ao.cap_pmcs, "Cap on potential maximal cliques (0 = none)");
    analyze_cmd->add_flag("--json", ao.json, "JSON report");

    detail::GenerateOptions go;
    auto* gen_cmd = app.add_subcommand("generate", "Write a seeded instance");
    gen_cmd->add_option("family", go.family, "prism, chordal, lhf-filter, lhf-grow or complement-of")->required();
    gen_cmd->add_option("params", go.params, "Family parameters");
    gen_cmd->add_option("--seed", go.seed, "Random seed");
    gen_cmd->add_option("--out", go.out_file, "Output file (default stdout)");
    gen_cmd->add_option("--max-prism", go.max_prism, "lhf-grow: reject prisms larger than this (0 = no limit)");
    gen_cmd->add_option("--tries", go.tries, "lhf-filter: sample cap")->check(CLI::PositiveNumber);

    detail::BenchOptions bo;
    auto* bench_cmd = app.add_subcommand("bench", "Run every strategy and compare");
    bench_cmd->add_option("file", bo.file, "Graph file")->required();
    bench_cmd->add_flag("--json", bo.json, "JSON report");
    bench_cmd->add_flag("--timing", bo.timing, "Report wall time per strategy");

    std::vector<std::string> argv_store{"holefree"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*solve_cmd) return detail::cmd_solve(so, out);
        if (*verify_cmd) return detail::cmd_verify(vo, out);
        if (*analyze_cmd) return detail::cmd_analyze(ao, out);
        if (*gen_cmd) return detail::cmd_generate(go, out);
        if (*bench_cmd) return detail::cmd_bench(bo, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const CapacityExceeded& e) {
        err << "capacity exceeded: " << e.what() << '\n';
        return kCapacity;
    } catch (const LimitExceeded& e) {
        err << "capacity exceeded: " << e.what() << '\n';
        return kCapacity;
    } catch (const WidthTooLarge& e) {
        err << "capacity exceeded: " << e.what() << '\n';
        return kCapacity;
    } catch (const WitnessNotFound& e) {
        err << "internal witness failure: " << e.what() << '\n';
        return kWitness;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace holefree::cli
