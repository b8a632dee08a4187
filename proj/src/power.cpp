#include "lvr/power.hpp"

#include <algorithm>

namespace lvr {

namespace {

// Breadth-limited traversal; fills `hit` with reached vertices (excluding v).
// `mark` must be all -1 and is restored before returning.
void bounded_bfs(const Graph& g, int v, int ell, std::vector<int>& mark,
                 std::vector<int>& hit) {
    hit.clear();
    mark[v] = 0;
    std::vector<int> frontier{v};
    std::vector<int> next;
    for (int depth = 1; depth <= ell && !frontier.empty(); ++depth) {
        next.clear();
        for (int u : frontier) {
            for (int w : g.adj[u]) {
                if (mark[w] != -1) continue;
                mark[w] = depth;
                next.push_back(w);
                hit.push_back(w);
            }
        }
        frontier.swap(next);
    }
    mark[v] = -1;
    for (int w : hit) mark[w] = -1;
}

}  // namespace

std::vector<int> ball_around(const Graph& g, int v, int ell) {
    std::vector<int> mark(g.n, -1);
    std::vector<int> hit;
    bounded_bfs(g, v, ell, mark, hit);
    std::sort(hit.begin(), hit.end());
    return hit;
}

PowerGraph power_graph(const Graph& g, int ell) {
    if (ell < 1) throw input_error("power_graph: ell must be >= 1");
    PowerGraph p;
    p.ell = ell;
    p.graph = Graph(g.n);
    std::vector<int> mark(g.n, -1);
    std::vector<int> hit;
    for (int v = 0; v < g.n; ++v) {
        bounded_bfs(g, v, ell, mark, hit);
        auto& nbrs = p.graph.adj[v];
        nbrs = hit;
        std::sort(nbrs.begin(), nbrs.end());
    }
    return p;
}

}  // namespace lvr
