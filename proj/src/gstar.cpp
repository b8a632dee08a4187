#include "lvr/gstar.hpp"

#include <algorithm>
#include <set>

namespace lvr {

int64_t MultigraphGStar::multiplicity(int v, int w) const {
    const auto& row = adj[v];
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(w, INT64_MIN));
    if (it != row.end() && it->first == w) return it->second;
    return 0;
}

MultigraphGStar build_g_star(const Graph& g, const PathFamily& fam) {
    if (fam.n != g.n) throw input_error("build_g_star: family was not enumerated over this graph");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(fam.size());
    for (size_t i = 0; i < fam.size(); ++i)
        pairs.emplace_back(fam.endpoint_a(i), fam.endpoint_b(i));  // canonical: a < b
    std::sort(pairs.begin(), pairs.end());

    MultigraphGStar gs;
    gs.n = g.n;
    gs.adj.resize(g.n);
    gs.degree.assign(g.n, 0);
    for (size_t i = 0; i < pairs.size();) {
        size_t j = i;
        while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
        auto [a, b] = pairs[i];
        int64_t m = static_cast<int64_t>(j - i);
        gs.adj[a].emplace_back(b, m);
        gs.adj[b].emplace_back(a, m);
        gs.degree[a] += m;
        gs.degree[b] += m;
        i = j;
    }
    for (auto& row : gs.adj) std::sort(row.begin(), row.end());
    return gs;
}

DegeneracyOrder greedy_degeneracy_order_multigraph(const MultigraphGStar& gs) {
    DegeneracyOrder res;
    res.order.reserve(gs.n);
    std::vector<int64_t> deg = gs.degree;
    std::set<std::pair<int64_t, int>> queue;
    for (int v = 0; v < gs.n; ++v) queue.emplace(deg[v], v);
    std::vector<char> removed(gs.n, 0);
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        res.degeneracy = std::max(res.degeneracy, d);
        res.order.push_back(v);
        removed[v] = 1;
        for (const auto& [w, m] : gs.adj[v]) {
            if (removed[w]) continue;
            queue.erase({deg[w], w});
            deg[w] -= m;
            queue.emplace(deg[w], w);
        }
    }
    // Peeled-first-last becomes coloured-first-first: back-degree is bounded.
    std::reverse(res.order.begin(), res.order.end());
    return res;
}

}  // namespace lvr
