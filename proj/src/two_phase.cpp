#include "lvr/two_phase.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "lvr/power.hpp"
#include "lvr/rng.hpp"

namespace lvr {

namespace {

constexpr int64_t kSaturated = INT64_MAX / 4;

int64_t mul_saturating(int64_t a, int64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

int64_t pow_saturating(int64_t base, int exp) {
    int64_t r = 1;
    while (exp-- > 0) r = mul_saturating(r, base);
    return r;
}

int64_t ceil_div(int64_t a, int64_t b) { return (a + b - 1) / b; }

double clamped_log2(int n) { return std::max(1.0, std::log2(std::max(1, n))); }

}  // namespace

RankingParams RankingParams::derive(int n, int ell, int d, int delta, uint64_t seed,
                                    int64_t c_m_override) {
    if (ell < 2) throw input_error("RankingParams: ell must be >= 2");
    RankingParams p;
    p.n = n;
    p.ell = ell;
    p.d = std::max(1, d);
    p.delta = std::max(0, delta);
    p.seed = seed;

    const int half = ell / 2;
    const double logn = clamped_log2(n);
    p.b = (pow_saturating(p.delta, half - 1) >= logn) ? 0.0 : 0.25;

    if (p.delta == 0) {
        p.k = 1;
    } else {
        double kf = std::pow(static_cast<double>(p.delta), half - 0.5) * std::pow(logn, p.b);
        p.k = std::max<int64_t>(1, static_cast<int64_t>(std::ceil(kf)));
    }
    internal_check(p.k <= (1LL << 30), "palette size k out of range");

    p.c_m = c_m_override > 0
                ? c_m_override
                : mul_saturating(pow_saturating(2, ell + 1), pow_saturating(p.d, (ell + 1) / 2));
    p.M = std::max<int64_t>(
        1, ceil_div(mul_saturating(p.c_m, pow_saturating(p.delta, half)), p.k));
    return p;
}

Phase1Result phase1_colour(const Graph& g, int ell, const RankingParams& params,
                           const Palettes& pal, const Layering& lay, const PathFamily& famP,
                           const EndpointMap& tau, const DegeneracyOrder& colour_order) {
    if (famP.n != g.n) throw input_error("phase1_colour: family does not match graph");
    if (static_cast<int>(lay.layer.size()) != g.n)
        throw input_error("phase1_colour: layering does not cover the graph");
    if (tau.assignment.size() != famP.size())
        throw input_error("phase1_colour: tau does not cover the family");
    (void)ell;

    const int n = g.n;
    const int64_t k = params.k;

    std::vector<std::vector<int32_t>> tau_inv(n);
    for (size_t i = 0; i < famP.size(); ++i)
        tau_inv[tau.assignment[i]].push_back(static_cast<int32_t>(i));

    Phase1Result res;
    for (const auto& list : tau_inv)
        res.max_tau_load = std::max<int64_t>(res.max_tau_load, list.size());
    // Load-balancing gate: the default constant in M is sized to satisfy it.
    internal_check(params.M * k >= res.max_tau_load, "M*k >= max |tau^-1(w)| must hold");

    res.colouring.colours.assign(n, 0);
    res.colouring.tags.assign(n, RankedColouring::TAG_NONE);
    res.state.created_at.assign(n, 0);

    std::vector<int64_t> cnt(2 * k);
    std::vector<std::pair<int64_t, int64_t>> ranked(2 * k);  // (N_alpha, palette offset)
    for (int w : colour_order.order) {
        const int j = lay.layer[w];
        const int64_t base = pal.layer_base(j);
        std::fill(cnt.begin(), cnt.end(), 0);
        for (int32_t pid : tau_inv[w]) {
            int other = famP.endpoint_a(pid) == w ? famP.endpoint_b(pid) : famP.endpoint_a(pid);
            int64_t c = res.colouring.colours[other];
            internal_check(c > base && c <= base + 2 * k,
                           "other endpoint not coloured from the shared layer palette");
            ++cnt[c - base - 1];
        }
        for (int64_t t = 0; t < 2 * k; ++t) ranked[t] = {cnt[t], t};
        std::sort(ranked.begin(), ranked.end());

        const int64_t tau_load = static_cast<int64_t>(tau_inv[w].size());
        internal_check(ranked[k - 1].first <= tau_load / k,
                       "subpalette max load exceeds the averaging bound");

        auto rng = SplitMix64::stream(params.seed, static_cast<uint64_t>(w));
        const int64_t offset = ranked[rng.next_below(static_cast<uint64_t>(k))].second;
        const int64_t alpha = base + 1 + offset;
        res.colouring.colours[w] = static_cast<int>(alpha);
        res.colouring.tags[w] = j;

        const int64_t created = cnt[offset];
        internal_check(created <= params.M, "phase-1 cap exceeded: created > M");
        res.state.created_at[w] = created;
        res.max_created = std::max(res.max_created, created);
        if (created > 0) {
            for (int32_t pid : tau_inv[w]) {
                int other =
                    famP.endpoint_a(pid) == w ? famP.endpoint_b(pid) : famP.endpoint_a(pid);
                if (res.colouring.colours[other] == alpha)
                    res.state.problematic_paths.push_back(pid);
            }
        }
    }
    return res;
}

int64_t phase2_recolour(const Graph& g, int ell, RankedColouring& col, ProblemState& state,
                        const EndpointMap& gamma, const Palettes& pal) {
    std::vector<int> p_set;
    p_set.reserve(state.problematic_paths.size());
    for (int32_t pid : state.problematic_paths) p_set.push_back(gamma.assignment[pid]);
    std::sort(p_set.begin(), p_set.end());
    p_set.erase(std::unique(p_set.begin(), p_set.end()), p_set.end());
    state.problem_vertices = p_set;
    if (p_set.empty()) return 0;

    // G^ell[P] assembled directly from distance-<=ell balls around P.
    std::vector<int> local(g.n, -1);
    for (size_t i = 0; i < p_set.size(); ++i) local[p_set[i]] = static_cast<int>(i);
    Graph sub(static_cast<int>(p_set.size()));
    for (size_t i = 0; i < p_set.size(); ++i) {
        for (int w : ball_around(g, p_set[i], ell))
            if (local[w] != -1) sub.adj[i].push_back(local[w]);
    }

    auto ord = degeneracy_order(sub);
    std::vector<int> colour_order(ord.order.rbegin(), ord.order.rend());
    std::vector<int> sub_colours =
        greedy_colour_along(sub, colour_order, static_cast<int>(pal.phase2_base()));

    int64_t top = 0;
    for (size_t i = 0; i < p_set.size(); ++i) {
        col.colours[p_set[i]] = sub_colours[i];
        col.tags[p_set[i]] = RankedColouring::TAG_PHASE2;
        top = std::max<int64_t>(top, sub_colours[i]);
    }
    // Greedy colours are contiguous from the base, so the max gives the count.
    return top - pal.phase2_base();
}

namespace {

void count_distinct_colours(const RankedColouring& col, RankingStats& stats) {
    std::set<int> phase1, phase2, split;
    for (size_t v = 0; v < col.colours.size(); ++v) {
        if (col.tags[v] >= 0)
            phase1.insert(col.colours[v]);
        else if (col.tags[v] == RankedColouring::TAG_PHASE2)
            phase2.insert(col.colours[v]);
        else if (col.tags[v] == RankedColouring::TAG_SPLIT)
            split.insert(col.colours[v]);
    }
    stats.colours_phase1 = static_cast<int64_t>(phase1.size());
    stats.colours_phase2 = static_cast<int64_t>(phase2.size());
    stats.colours_split = static_cast<int64_t>(split.size());
    stats.colours_total = stats.colours_phase1 + stats.colours_phase2 + stats.colours_split;
}

[[noreturn]] void raise_invalid(const Graph& g, int ell, const RankedColouring& col) {
    auto vs = find_violations(g, ell, col);
    std::ostringstream ss;
    ss << "ranking algorithm produced an invalid colouring (" << vs.size() << " violations)";
    if (!vs.empty()) {
        ss << "; first witness: colour=" << vs.front().colour << " path:";
        for (int v : vs.front().path) ss << " " << v;
    }
    throw std::logic_error(ss.str());
}

}  // namespace

RankingResult rank_bounded_degree(const Graph& g, int ell, int d, int delta, uint64_t seed,
                                  const RankOptions& opts) {
    if (ell < 1) throw input_error("rank_bounded_degree: ell must be >= 1");
    if (g.max_degree() > delta)
        throw input_error("rank_bounded_degree: graph max degree " +
                          std::to_string(g.max_degree()) + " exceeds Delta " +
                          std::to_string(delta));

    RankingResult res;
    res.core_vertices.resize(g.n);
    std::iota(res.core_vertices.begin(), res.core_vertices.end(), 0);
    res.stats.n = g.n;
    res.stats.ell = ell;
    res.stats.d_supplied = d;
    res.stats.delta = delta;
    res.stats.seed = seed;

    auto ord = degeneracy_order(g);
    int d_eff = std::max(1, d);
    if (d_eff < ord.degeneracy) {
        res.warnings.push_back("supplied d=" + std::to_string(d) + " below actual degeneracy " +
                               std::to_string(ord.degeneracy) + "; using the actual value");
        d_eff = static_cast<int>(ord.degeneracy);
    }
    res.stats.d_used = d_eff;

    if (ell == 1) {
        std::vector<int> rev(ord.order.rbegin(), ord.order.rend());
        res.colouring = RankedColouring::plain(greedy_colour_along(g, rev, 0));
        std::fill(res.colouring.tags.begin(), res.colouring.tags.end(), 0);
        if (!is_valid_ranking(g, ell, res.colouring)) raise_invalid(g, ell, res.colouring);
        count_distinct_colours(res.colouring, res.stats);
        return res;
    }

    auto lay = compute_layering(g, d_eff);
    internal_check(lay.halving_held, "survivor halving failed for a d-degenerate input");
    res.stats.q = lay.q;

    EnumerateOptions eopts = opts.enumerate;
    if (!eopts.warn)
        eopts.warn = [&res](const std::string& msg) { res.warnings.push_back(msg); };
    auto famP = enumerate_restricted_family(g, ell, lay, eopts);

    auto gstar = build_g_star(g, famP);
    auto colour_order = greedy_degeneracy_order_multigraph(gstar);
    auto tau = tau_map(famP, colour_order);

    auto params = RankingParams::derive(g.n, ell, d_eff, delta, seed, opts.c_m);
    res.stats.k = params.k;
    res.stats.M = params.M;
    res.stats.b = params.b;
    Palettes pal{params.k, lay.q};

    auto ph1 = phase1_colour(g, ell, params, pal, lay, famP, tau, colour_order);
    res.stats.max_tau_load = ph1.max_tau_load;
    res.stats.max_created = ph1.max_created;

    auto gprime = build_g_prime(g, lay);
    internal_check(gprime.max_out_degree <= 4LL * d_eff, "G' out-degree exceeds 4d");
    auto gamma = gamma_map(famP, gprime);

    res.colouring = std::move(ph1.colouring);
    auto state = std::move(ph1.state);
    phase2_recolour(g, ell, res.colouring, state, gamma, pal);
    res.problem_vertices = state.problem_vertices;
    res.stats.p_size = static_cast<int64_t>(state.problem_vertices.size());

    if (!is_valid_ranking(g, ell, res.colouring)) raise_invalid(g, ell, res.colouring);
    count_distinct_colours(res.colouring, res.stats);
    return res;
}

int degree_split_threshold(int n, int ell, int d) {
    if (ell < 2) throw input_error("degree_split_threshold: ell must be >= 2");
    if (n <= 0) return std::max(1, d);
    const double exponent = 1.0 / (ell / 2 + 0.5);
    const double logn = clamped_log2(n);
    double value = std::pow(static_cast<double>(n), exponent) * std::pow(logn, -5.0 / 6.0);
    return std::max({d, 1, static_cast<int>(std::floor(value))});
}

RankingResult rank_degenerate(const Graph& g, int ell, int d, uint64_t seed,
                              const RankOptions& opts) {
    if (ell < 1) throw input_error("rank_degenerate: ell must be >= 1");
    if (ell == 1) return rank_bounded_degree(g, ell, d, std::max(1, g.max_degree()), seed, opts);

    const int delta = degree_split_threshold(g.n, ell, d);
    std::vector<int> split, rest;
    for (int v = 0; v < g.n; ++v)
        (g.degree(v) >= delta ? split : rest).push_back(v);

    Graph core = induced_subgraph(g, rest);
    RankingResult sub = rank_bounded_degree(core, ell, d, delta, seed, opts);

    RankingResult res;
    res.warnings = std::move(sub.warnings);
    res.stats = sub.stats;
    res.stats.n = g.n;
    res.colouring.colours.assign(g.n, 0);
    res.colouring.tags.assign(g.n, RankedColouring::TAG_NONE);
    int64_t max_colour = 0;
    for (size_t i = 0; i < rest.size(); ++i) {
        res.colouring.colours[rest[i]] = sub.colouring.colours[i];
        res.colouring.tags[rest[i]] = sub.colouring.tags[i];
        max_colour = std::max<int64_t>(max_colour, sub.colouring.colours[i]);
    }
    for (size_t i = 0; i < split.size(); ++i) {
        res.colouring.colours[split[i]] = static_cast<int>(max_colour + 1 + i);
        res.colouring.tags[split[i]] = RankedColouring::TAG_SPLIT;
    }
    for (int p : sub.problem_vertices) res.problem_vertices.push_back(rest[p]);
    res.split_vertices = split;
    res.core_vertices = rest;

    if (!is_valid_ranking(g, ell, res.colouring)) raise_invalid(g, ell, res.colouring);
    count_distinct_colours(res.colouring, res.stats);
    return res;
}

}  // namespace lvr
