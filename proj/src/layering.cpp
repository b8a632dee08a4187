#include "lvr/layering.hpp"

#include <algorithm>

namespace lvr {

Layering compute_layering(const Graph& g, int d) {
    if (d < 1) throw input_error("compute_layering: d must be >= 1");
    Layering lay;
    lay.layer.assign(g.n, 0);
    lay.survivor_sizes.push_back(g.n);

    std::vector<int> survivors(g.n);
    for (int v = 0; v < g.n; ++v) survivors[v] = v;
    std::vector<char> in_set(g.n, 1);
    const int64_t threshold = 4LL * d;

    int i = 0;
    while (!survivors.empty()) {
        std::vector<int> next;
        for (int v : survivors) {
            int64_t deg = 0;
            for (int w : g.adj[v]) deg += in_set[w];
            if (deg >= threshold) next.push_back(v);
        }
        if (next.empty()) break;
        if (2 * static_cast<int64_t>(next.size()) > static_cast<int64_t>(survivors.size()))
            lay.halving_held = false;
        if (next.size() == survivors.size()) break;  // stagnant; cut the recursion
        ++i;
        std::fill(in_set.begin(), in_set.end(), 0);
        for (int v : next) {
            in_set[v] = 1;
            lay.layer[v] = i;
        }
        lay.survivor_sizes.push_back(static_cast<int64_t>(next.size()));
        survivors.swap(next);
    }
    lay.q = i;
    return lay;
}

Orientation build_g_prime(const Graph& g, const Layering& lay) {
    if (static_cast<int>(lay.layer.size()) != g.n)
        throw input_error("build_g_prime: layering does not cover the graph");
    Orientation o;
    o.n = g.n;
    o.out.resize(g.n);
    for (int v = 0; v < g.n; ++v) {
        for (int w : g.adj[v])
            if (lay.layer[v] <= lay.layer[w]) o.out[v].push_back(w);
        // adjacency is sorted, so each out list is already sorted
        o.max_out_degree = std::max<int64_t>(o.max_out_degree, o.out[v].size());
    }
    return o;
}

}  // namespace lvr
