#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "lvr/harness.hpp"
#include "lvr/io.hpp"
#include "lvr/paths.hpp"
#include "lvr/power.hpp"

namespace {

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw lvr::input_error("cannot open output file: " + path);
    return file;
}

void emit_warnings(const lvr::RankingResult& res) {
    for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
}

int require_ell(int ell) {
    if (ell < 1) throw lvr::input_error("--ell must be >= 1");
    return ell;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"l-vertex-ranking toolkit: constructive rankings of degenerate graphs"};
    app.require_subcommand(1);

    std::string graph_file, colour_file, out_file, family = "random_d_degenerate", format = "text";
    int ell = 2, d = 0, delta = 0, n = 0, seeds = 5, trials = 20, threads = 0;
    uint64_t seed = 1;
    int64_t budget = 20'000'000;
    int64_t c_m = 0;
    std::vector<int> n_list;

    auto* rank = app.add_subcommand("rank", "rank a graph and emit the colouring JSON");
    rank->add_option("graph", graph_file, "edge-list file")->required();
    rank->add_option("--ell", ell, "path-length bound (>= 1)")->required();
    rank->add_option("--d", d, "degeneracy hint (0: use the computed value)");
    rank->add_option("--delta", delta,
                     "max-degree bound; > 0 runs the bounded-degree algorithm directly");
    rank->add_option("--seed", seed, "RNG seed");
    rank->add_option("--cm", c_m, "override for the constant in M");
    rank->add_option("--out", out_file, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "check a colouring against a graph");
    verify->add_option("graph", graph_file, "edge-list file")->required();
    verify->add_option("colouring", colour_file, "colouring file (JSON or one colour per line)")
        ->required();
    verify->add_option("--ell", ell, "path-length bound")->required();
    verify->add_option("--format", format, "witness format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out_file, "output file (default stdout)");

    auto* exact = app.add_subcommand("exact", "exhaustive ranking number for small graphs");
    exact->add_option("graph", graph_file, "edge-list file")->required();
    exact->add_option("--ell", ell, "path-length bound")->required();
    exact->add_option("--budget", budget, "branch-and-bound node budget");
    exact->add_option("--out", out_file, "output file (default stdout)");

    auto* gen = app.add_subcommand("gen", "generate an instance as an edge list");
    gen->add_option("--family", family,
                    "path|cycle|tree|grid|hypercube|random_d_degenerate|"
                    "random_d_degenerate_bounded_degree");
    gen->add_option("--n", n, "vertex count (hypercube: dimension)")->required();
    gen->add_option("--d", d, "degeneracy parameter for random families");
    gen->add_option("--delta", delta, "max degree for the bounded-degree family");
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--out", out_file, "output file (default stdout)");

    auto* power = app.add_subcommand("power", "emit the ell-th power of a graph");
    power->add_option("graph", graph_file, "edge-list file")->required();
    power->add_option("--ell", ell, "power exponent")->required();
    power->add_option("--out", out_file, "output file (default stdout)");

    auto* paths_cmd = app.add_subcommand("paths", "dump all canonical paths of length <= ell");
    paths_cmd->add_option("graph", graph_file, "edge-list file")->required();
    paths_cmd->add_option("--ell", ell, "path-length bound")->required();
    paths_cmd->add_option("--out", out_file, "output file (default stdout)");

    auto* scaling = app.add_subcommand("bench-scaling", "colour counts across a size grid (CSV)");
    scaling->add_option("--family", family, "graph family");
    scaling->add_option("--n", n_list, "grid of vertex counts")->required();
    scaling->add_option("--d", d, "degeneracy parameter")->required();
    scaling->add_option("--ell", ell, "path-length bound")->required();
    scaling->add_option("--seeds", seeds, "trials per size");
    scaling->add_option("--seed", seed, "base seed");
    scaling->add_option("--threads", threads, "worker pool size (0: auto)");
    scaling->add_option("--out", out_file, "output file (default stdout)");

    auto* tail = app.add_subcommand("bench-tail", "phase-2 load statistic per trial (CSV)");
    tail->add_option("--family", family, "graph family")
        ->default_val("random_d_degenerate_bounded_degree");
    tail->add_option("--n", n, "vertex count")->required();
    tail->add_option("--d", d, "degeneracy parameter")->required();
    tail->add_option("--delta", delta, "max degree for the bounded-degree family");
    tail->add_option("--ell", ell, "path-length bound")->required();
    tail->add_option("--trials", trials, "number of trials");
    tail->add_option("--seed", seed, "base seed");
    tail->add_option("--threads", threads, "worker pool size (0: auto)");
    tail->add_option("--out", out_file, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::ofstream file;
    try {
        if (rank->parsed()) {
            require_ell(ell);
            lvr::Graph g = lvr::read_edge_list_file(graph_file);
            lvr::RankOptions opts;
            opts.c_m = c_m;
            int d_used = d > 0 ? d : std::max<int>(1, (int)lvr::degeneracy_order(g).degeneracy);
            lvr::RankingResult res =
                delta > 0 ? lvr::rank_bounded_degree(g, ell, d_used, delta, seed, opts)
                          : lvr::rank_degenerate(g, ell, d_used, seed, opts);
            emit_warnings(res);
            open_output(file, out_file) << lvr::colouring_json(res);
            std::cerr << "valid: " << res.stats.colours_total << " colours\n";
            return 0;
        }
        if (verify->parsed()) {
            require_ell(ell);
            lvr::Graph g = lvr::read_edge_list_file(graph_file);
            lvr::RankedColouring col = lvr::read_colouring_file(colour_file, g.n);
            auto vs = lvr::find_violations(g, ell, col);
            auto& out = open_output(file, out_file);
            if (vs.empty()) {
                out << (format == "json" ? "[]\n" : "valid\n");
                return 0;
            }
            if (format == "json")
                out << lvr::violations_json(vs, col);
            else
                out << lvr::violations_report_text(vs);
            std::cerr << "invalid: " << vs.size() << " violation(s)\n";
            return 1;
        }
        if (exact->parsed()) {
            require_ell(ell);
            lvr::Graph g = lvr::read_edge_list_file(graph_file);
            lvr::ExactLimits limits;
            limits.max_nodes = budget;
            auto res = lvr::exact_ranking_number(g, ell, limits);
            open_output(file, out_file) << lvr::exact_result_json(res);
            if (!res.exhaustive) {
                std::cerr << "budget exceeded: value is only an upper bound\n";
                return 1;
            }
            return 0;
        }
        if (gen->parsed()) {
            lvr::GenSpec spec{lvr::family_from_string(family), n, std::max(1, d), delta, seed};
            lvr::Graph g = lvr::generate(spec);
            lvr::write_edge_list(open_output(file, out_file), g, lvr::genspec_json(spec));
            return 0;
        }
        if (power->parsed()) {
            require_ell(ell);
            lvr::Graph g = lvr::read_edge_list_file(graph_file);
            auto pg = lvr::power_graph(g, ell);
            lvr::write_edge_list(open_output(file, out_file), pg.graph,
                                 "power ell=" + std::to_string(ell));
            return 0;
        }
        if (paths_cmd->parsed()) {
            require_ell(ell);
            lvr::Graph g = lvr::read_edge_list_file(graph_file);
            lvr::EnumerateOptions opts;
            opts.warn = [](const std::string& msg) { std::cerr << "warning: " << msg << "\n"; };
            auto fam = lvr::enumerate_paths(g, ell, opts);
            lvr::dump_paths(open_output(file, out_file), fam);
            return 0;
        }
        if (scaling->parsed()) {
            require_ell(ell);
            auto res = lvr::bench_scaling(lvr::family_from_string(family), d, ell, n_list,
                                          seeds, seed, threads);
            open_output(file, out_file) << res.csv;
            if (!res.all_valid) {
                std::cerr << "trial failed: " << res.first_failure << "\n";
                return 1;
            }
            return 0;
        }
        if (tail->parsed()) {
            require_ell(ell);
            lvr::GenSpec spec{lvr::family_from_string(family), n, std::max(1, d), delta, seed};
            auto res = lvr::bench_tail(spec, ell, trials, seed, threads);
            open_output(file, out_file) << res.csv;
            if (!res.all_valid) {
                std::cerr << "trial failed: " << res.first_failure << "\n";
                return 1;
            }
            return 0;
        }
    } catch (const lvr::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
