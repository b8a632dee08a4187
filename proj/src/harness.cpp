#include "lvr/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "lvr/power.hpp"

namespace lvr {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

double clamped_log2(int n) { return std::max(1.0, std::log2(std::max(1, n))); }

int pool_size(int requested, size_t trials) {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    int t = requested > 0 ? requested : std::clamp(hw, 1, 8);
    return std::max(1, std::min<int>(t, static_cast<int>(trials)));
}

void run_pool(size_t count, int threads, const std::function<void(size_t)>& work) {
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count) return;
            work(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
}

}  // namespace

std::string experiment_csv_header() {
    return "kind,family,n,ell,d,delta,k,M,b,q,colours_total,colours_phase1,colours_phase2,"
           "colours_split,p_size,max_out_p,tail_ratio,median_colours,norm_ratio,seed,valid,"
           "wall_ms";
}

std::string ExperimentRecord::csv_row() const {
    std::ostringstream ss;
    ss << "trial," << family_to_string(spec.family) << "," << stats.n << "," << ell << ","
       << spec.d << "," << stats.delta << "," << stats.k << "," << stats.M << ","
       << fmt_double(stats.b) << "," << stats.q << "," << stats.colours_total << ","
       << stats.colours_phase1 << "," << stats.colours_phase2 << "," << stats.colours_split
       << "," << stats.p_size << "," << max_out_p << "," << fmt_double(tail_ratio) << ",,,"
       << seed << "," << (valid ? 1 : 0) << "," << wall_ms;
    return ss.str();
}

int64_t max_out_neighbours_in_p(const Graph& core, int ell, const std::vector<int>& p_local) {
    if (core.n == 0 || p_local.empty()) return 0;
    auto pg = power_graph(core, ell);
    auto ord = degeneracy_order(pg.graph);
    std::vector<int> pos(core.n);
    for (int i = 0; i < core.n; ++i) pos[ord.order[i]] = i;
    std::vector<char> in_p(core.n, 0);
    for (int v : p_local) in_p[v] = 1;
    int64_t best = 0;
    for (int v = 0; v < core.n; ++v) {
        int64_t cnt = 0;
        for (int w : pg.graph.adj[v])
            if (pos[w] > pos[v] && in_p[w]) ++cnt;
        best = std::max(best, cnt);
    }
    return best;
}

double scaling_normalizer(int n, int ell) {
    double exponent = 1.0 - 1.0 / (ell / 2 + 0.5);
    return std::pow(static_cast<double>(n), exponent) * clamped_log2(n);
}

ExperimentRecord run_rank_trial(const GenSpec& spec, int ell) {
    ExperimentRecord rec;
    rec.spec = spec;
    rec.ell = ell;
    rec.seed = spec.seed;
    auto start = std::chrono::steady_clock::now();
    try {
        Graph g = generate(spec);
        RankingResult res;
        if (spec.family == Family::random_d_degenerate_bounded_degree && spec.delta > 0)
            res = rank_bounded_degree(g, ell, spec.d, spec.delta, spec.seed);
        else
            res = rank_degenerate(g, ell, spec.d, spec.seed);
        rec.stats = res.stats;
        rec.split_count = static_cast<int64_t>(res.split_vertices.size());
        rec.valid = true;  // rank_* verifies and throws otherwise

        Graph core = induced_subgraph(g, res.core_vertices);
        std::vector<int> local(g.n, -1);
        for (size_t i = 0; i < res.core_vertices.size(); ++i) local[res.core_vertices[i]] = (int)i;
        std::vector<int> p_local;
        for (int v : res.problem_vertices) p_local.push_back(local[v]);
        rec.max_out_p = max_out_neighbours_in_p(core, ell, p_local);
        rec.tail_ratio = static_cast<double>(rec.max_out_p) /
                         (static_cast<double>(std::max<int64_t>(1, res.stats.k)) *
                          clamped_log2(core.n));
    } catch (const std::exception& e) {
        rec.valid = false;
        rec.error = e.what();
    }
    auto stop = std::chrono::steady_clock::now();
    rec.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return rec;
}

namespace {

BenchResult collect(std::vector<GenSpec> specs, int ell, int threads) {
    BenchResult out;
    out.records.resize(specs.size());
    run_pool(specs.size(), pool_size(threads, specs.size()),
             [&](size_t i) { out.records[i] = run_rank_trial(specs[i], ell); });
    for (const auto& rec : out.records) {
        if (!rec.valid && out.all_valid) {
            out.all_valid = false;
            out.first_failure = rec.error;
        }
    }
    return out;
}

}  // namespace

BenchResult bench_scaling(Family family, int d, int ell, const std::vector<int>& ns, int seeds,
                          uint64_t seed_base, int threads) {
    std::vector<GenSpec> specs;
    for (int n : ns)
        for (int s = 0; s < seeds; ++s)
            specs.push_back(GenSpec{family, n, d, 0, seed_base + static_cast<uint64_t>(s)});

    BenchResult out = collect(std::move(specs), ell, threads);
    std::ostringstream csv;
    csv << experiment_csv_header() << "\n";
    for (const auto& rec : out.records) csv << rec.csv_row() << "\n";

    for (size_t ni = 0; ni < ns.size() && seeds > 0; ++ni) {
        std::vector<int64_t> colours;
        for (int s = 0; s < seeds; ++s)
            colours.push_back(out.records[ni * seeds + s].stats.colours_total);
        std::sort(colours.begin(), colours.end());
        double median = colours.size() % 2
                            ? static_cast<double>(colours[colours.size() / 2])
                            : (colours[colours.size() / 2 - 1] + colours[colours.size() / 2]) /
                                  2.0;
        int n = ns[ni];
        csv << "summary," << family_to_string(family) << "," << n << "," << ell << "," << d
            << ",,,,,,,,,,,,," << fmt_double(median) << ","
            << fmt_double(median / scaling_normalizer(n, ell)) << ",,,\n";
    }
    out.csv = csv.str();
    return out;
}

BenchResult bench_tail(const GenSpec& spec, int ell, int trials, uint64_t seed_base,
                       int threads) {
    std::vector<GenSpec> specs;
    for (int t = 0; t < trials; ++t) {
        GenSpec s = spec;
        s.seed = seed_base + static_cast<uint64_t>(t);
        specs.push_back(s);
    }
    BenchResult out = collect(std::move(specs), ell, threads);
    std::ostringstream csv;
    csv << experiment_csv_header() << "\n";
    for (const auto& rec : out.records) csv << rec.csv_row() << "\n";
    out.csv = csv.str();
    return out;
}

}  // namespace lvr
