#include "lvr/degeneracy.hpp"

#include <algorithm>
#include <set>

namespace lvr {

DegeneracyOrder degeneracy_order(const Graph& g) {
    DegeneracyOrder res;
    res.order.reserve(g.n);
    std::vector<int64_t> deg(g.n);
    std::set<std::pair<int64_t, int>> queue;  // (current degree, vertex)
    for (int v = 0; v < g.n; ++v) {
        deg[v] = g.degree(v);
        queue.emplace(deg[v], v);
    }
    std::vector<char> removed(g.n, 0);
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        res.degeneracy = std::max(res.degeneracy, d);
        res.order.push_back(v);
        removed[v] = 1;
        for (int w : g.adj[v]) {
            if (removed[w]) continue;
            queue.erase({deg[w], w});
            --deg[w];
            queue.emplace(deg[w], w);
        }
    }
    return res;
}

bool Orientation::has_arc(int u, int v) const {
    const auto& heads = out[u];
    return std::binary_search(heads.begin(), heads.end(), v);
}

Orientation orient_acyclic(const Graph& g, const DegeneracyOrder& ord) {
    if (static_cast<int>(ord.order.size()) != g.n)
        throw input_error("orient_acyclic: order length does not match graph");
    std::vector<int> pos(g.n);
    for (int i = 0; i < g.n; ++i) pos[ord.order[i]] = i;

    Orientation o;
    o.n = g.n;
    o.out.resize(g.n);
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v])
            if (pos[v] < pos[w]) o.out[v].push_back(w);
    for (auto& heads : o.out) {
        std::sort(heads.begin(), heads.end());
        o.max_out_degree = std::max<int64_t>(o.max_out_degree, heads.size());
    }
    return o;
}

std::vector<int> greedy_colour_along(const Graph& g, const std::vector<int>& order, int base) {
    if (static_cast<int>(order.size()) != g.n)
        throw input_error("greedy_colour_along: order length does not match graph");
    std::vector<int> colour(g.n, 0);
    std::vector<char> used;
    for (int v : order) {
        used.assign(g.degree(v) + 2, 0);
        for (int w : g.adj[v]) {
            int c = colour[w] - base;
            if (c >= 1 && c < static_cast<int>(used.size())) used[c] = 1;
        }
        int c = 1;
        while (used[c]) ++c;
        colour[v] = base + c;
    }
    return colour;
}

}  // namespace lvr
