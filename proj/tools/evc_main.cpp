// Command-line front end: compute, oracle, crosscheck, bench.
//
// Exit codes: 0 success, 1 parse/usage error, 2 unsupported graph class,
// 3 oracle cap exceeded, 4 internal invariant violation (including
// crosscheck mismatches).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "evc/bench.hpp"
#include "evc/engine.hpp"
#include "evc/generators.hpp"
#include "evc/graph.hpp"
#include "evc/oracle.hpp"
#include "evc/report.hpp"

namespace {

evc::Graph load_graph(const std::string& path, double* parse_seconds = nullptr) {
    std::ifstream in(path);
    if (!in) throw evc::ParseError("cannot open '" + path + "'", 0);
    auto t0 = std::chrono::steady_clock::now();
    evc::Graph g = evc::parse_edge_list(in);
    if (parse_seconds)
        *parse_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return g;
}

int cmd_compute(const std::string& path, std::optional<int> query, bool json) {
    evc::EvcReport report;
    evc::Graph g = load_graph(path, &report.parse_seconds);
    report.result = evc::compute_evc_report(g, query);
    if (json)
        std::cout << evc::to_json(report).dump(2) << "\n";
    else
        std::cout << evc::render_text(report);
    return 0;
}

int cmd_oracle(const std::string& path, const std::vector<int>& require, int cap) {
    evc::Graph g = load_graph(path);
    evc::OracleLimits limits;
    if (cap > 0) {
        limits.max_vertices = cap;
        limits.max_guards = cap;
    }
    int value = require.empty() ? evc::oracle_evc(g, limits)
                                : evc::oracle_evc_required(g, require, limits);
    std::cout << value << "\n";
    return 0;
}

struct CrosscheckOptions {
    std::string kind = "cactus";
    int max_n = 8;
    int count = 100;
    uint64_t seed = 20240501;
};

int cmd_crosscheck(const CrosscheckOptions& opt) {
    evc::SplitMix64 seeder(opt.seed);
    evc::OracleLimits limits{11, 10};
    for (int i = 0; i < opt.count; ++i) {
        evc::SplitMix64 inst(seeder.next());
        int n = 2 + static_cast<int>(inst.below(std::max(opt.max_n - 1, 1)));
        double fraction = static_cast<double>(inst.below(101)) / 100.0;
        uint64_t graph_seed = inst.next();
        evc::Graph g = opt.kind == "chordal"
                           ? evc::random_chordal_block_graph(n, graph_seed)
                           : evc::random_cactus(n, fraction, graph_seed);

        std::string mismatch;
        long long engine_evc = evc::compute_evc(g).evc;
        int oracle = evc::oracle_evc(g, limits);
        if (engine_evc != oracle)
            mismatch = "evc: engine=" + std::to_string(engine_evc) +
                       " oracle=" + std::to_string(oracle);
        for (int v = 0; mismatch.empty() && v < n; ++v) {
            evc::EvcSummary s = evc::compute_evc_at(g, v);
            int ov = evc::oracle_evc_required(g, {v}, limits);
            evc::VertexType ot = evc::oracle_type(g, v, limits);
            if (s.evc != engine_evc || s.evc_anchor != ov || s.vtype != ot)
                mismatch = "vertex " + std::to_string(v) + ": engine=(" +
                           std::to_string(s.evc) + "," + std::to_string(s.evc_anchor) + "," +
                           evc::to_string(s.vtype) + ") oracle=(" + std::to_string(ov) + "," +
                           evc::to_string(ot) + ")";
        }
        if (!mismatch.empty()) {
            std::string file = "counterexample_" + opt.kind + "_" + std::to_string(i) + ".edges";
            std::ofstream out(file);
            out << "# crosscheck counterexample\n";
            out << "# kind=" << opt.kind << " instance=" << i << " n=" << n
                << " cycle_fraction=" << fraction << " graph_seed=" << graph_seed
                << " run_seed=" << opt.seed << "\n";
            out << g.serialize();
            std::cerr << "mismatch on instance " << i << " (" << mismatch << "); written to "
                      << file << "\n";
            std::cout << i << "/" << opt.count << " pass\n";
            return 4;
        }
    }
    std::cout << opt.count << "/" << opt.count << " pass\n";
    return 0;
}

int cmd_bench(const std::vector<long long>& sizes, uint64_t seed) {
    if (!std::is_sorted(sizes.begin(), sizes.end()))
        throw std::invalid_argument("bench sizes must be ascending");
    auto rows = evc::run_benchmark(sizes, seed);
    std::printf("%12s %12s %12s %8s\n", "n", "evc", "time_s", "ratio");
    for (const auto& row : rows) {
        if (row.ratio > 0.0)
            std::printf("%12lld %12lld %12.4f %8.2f\n", row.n, row.evc, row.seconds, row.ratio);
        else
            std::printf("%12lld %12lld %12.4f %8s\n", row.n, row.evc, row.seconds, "-");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"eternal vertex cover toolkit: block-formula engine plus exact game oracle"};
    app.require_subcommand(1);

    std::string compute_file;
    std::optional<int> compute_at;
    bool compute_json = false;
    auto* compute = app.add_subcommand("compute", "compute evc via the block-formula engine");
    compute->add_option("file", compute_file, "edge-list input")->required();
    compute->add_option("--at", compute_at, "also report evc_v and type for this vertex");
    compute->add_flag("--json", compute_json, "emit the JSON report");

    std::string oracle_file;
    std::vector<int> oracle_require;
    int oracle_cap = 0;
    auto* oracle = app.add_subcommand("oracle", "exact game-solving oracle (small graphs)");
    oracle->add_option("file", oracle_file, "edge-list input")->required();
    oracle->add_option("--require", oracle_require, "vertices that must stay occupied")
        ->delimiter(',');
    oracle->add_option("--cap", oracle_cap, "raise the vertex and guard caps (default 10/8)");

    CrosscheckOptions cc;
    auto* crosscheck = app.add_subcommand("crosscheck", "engine vs oracle on random instances");
    crosscheck->add_option("--kind", cc.kind, "instance family")
        ->check(CLI::IsMember({"cactus", "chordal"}));
    crosscheck->add_option("--n", cc.max_n, "max vertex count (default 8)")
        ->check(CLI::Range(2, 10));
    crosscheck->add_option("--count", cc.count, "instances to check (default 100)");
    crosscheck->add_option("--seed", cc.seed, "run seed");

    std::vector<long long> bench_sizes;
    uint64_t bench_seed = 1;
    auto* bench = app.add_subcommand("bench", "time the engine on random cacti");
    bench->add_option("--sizes", bench_sizes, "vertex counts, ascending")
        ->required()
        ->delimiter(',');
    bench->add_option("--seed", bench_seed, "generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (compute->parsed()) return cmd_compute(compute_file, compute_at, compute_json);
        if (oracle->parsed()) return cmd_oracle(oracle_file, oracle_require, oracle_cap);
        if (crosscheck->parsed()) return cmd_crosscheck(cc);
        if (bench->parsed()) return cmd_bench(bench_sizes, bench_seed);
    } catch (const evc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const evc::UnsupportedGraphError& e) {
        std::cerr << "unsupported graph: " << e.what() << "\n";
        return 2;
    } catch (const evc::OracleCapError& e) {
        std::cerr << "oracle cap: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
