#include "lvr/exact.hpp"

#include <algorithm>
#include <numeric>

#include "lvr/paths.hpp"

namespace lvr {

namespace {

struct SearchSpace {
    const Graph& g;
    // Flattened path table indexed per contained vertex, so an assignment only
    // checks the paths it could have completed.
    std::vector<std::vector<int32_t>> paths_at;
    std::vector<std::vector<int>> path_vertices;

    SearchSpace(const Graph& graph, int ell) : g(graph), paths_at(graph.n) {
        for_each_path(g, ell, [&](std::span<const int> p) {
            int32_t id = static_cast<int32_t>(path_vertices.size());
            path_vertices.emplace_back(p.begin(), p.end());
            for (int v : p) paths_at[v].push_back(id);
            return true;
        });
    }

    // True when the path is fully coloured and violating.
    bool violated(int32_t id, const std::vector<int>& colour) const {
        const auto& p = path_vertices[id];
        int c = colour[p.front()];
        if (c == 0 || colour[p.back()] != c) return false;
        for (size_t i = 1; i + 1 < p.size(); ++i) {
            int ci = colour[p[i]];
            if (ci == 0 || ci > c) return false;
        }
        return true;
    }
};

class BudgetExhausted {};

// Colour values are ordered in a ranking, so colour classes cannot be
// permuted freely; the only safe symmetry is order-preserving relabelling.
// Consequently, once K-1 has been exhausted, any solution at level K must use
// all K values (otherwise it would compress to fewer), which gives the
// counting prune below.
class Search {
public:
    Search(const SearchSpace& space, std::vector<int> order, int64_t budget)
        : space_(space), order_(std::move(order)), budget_(budget) {}

    int64_t nodes() const { return nodes_; }

    bool feasible(int K, std::vector<int>& out) {
        colour_.assign(space_.g.n, 0);
        value_count_.assign(K + 1, 0);
        if (descend(0, K, 0)) {
            out = colour_;
            return true;
        }
        return false;
    }

private:
    bool descend(size_t pos, int K, int distinct_used) {
        if (pos == order_.size()) return distinct_used == K;
        int v = order_[pos];
        int remaining = static_cast<int>(order_.size() - pos);
        for (int c = 1; c <= K; ++c) {
            int now_distinct = distinct_used + (value_count_[c] == 0 ? 1 : 0);
            if (K - now_distinct >= remaining) continue;  // cannot reach K values
            if (++nodes_ > budget_) throw BudgetExhausted{};
            colour_[v] = c;
            bool ok = true;
            for (int32_t id : space_.paths_at[v]) {
                if (space_.violated(id, colour_)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                ++value_count_[c];
                if (descend(pos + 1, K, now_distinct)) return true;
                --value_count_[c];
            }
            colour_[v] = 0;
        }
        return false;
    }

    const SearchSpace& space_;
    std::vector<int> order_;
    int64_t budget_ = 0;
    int64_t nodes_ = 0;
    std::vector<int> colour_;
    std::vector<int> value_count_;
};

std::vector<int> branching_order(const Graph& g) {
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

RankedColouring all_distinct(int n) {
    std::vector<int> colours(n);
    std::iota(colours.begin(), colours.end(), 1);
    return RankedColouring::plain(std::move(colours));
}

}  // namespace

ExactResult exact_ranking_number(const Graph& g, int ell, const ExactLimits& limits) {
    if (ell < 1) throw input_error("exact_ranking_number: ell must be >= 1");
    ExactResult res;
    if (g.n == 0) return res;

    SearchSpace space(g, ell);
    Search search(space, branching_order(g), limits.max_nodes);
    std::vector<int> found;
    for (int K = 1; K <= g.n; ++K) {
        bool ok;
        try {
            ok = search.feasible(K, found);
        } catch (const BudgetExhausted&) {
            res.nodes_explored = search.nodes();
            res.exhaustive = false;
            res.value = g.n;  // trivial upper bound: all-distinct colours rank any graph
            res.witness = all_distinct(g.n);
            return res;
        }
        if (ok) {
            res.nodes_explored = search.nodes();
            res.value = K;
            res.witness = RankedColouring::plain(std::move(found));
            return res;
        }
    }
    internal_check(false, "all-distinct colouring must be feasible at K = n");
    return res;
}

bool exact_check_all_colourings(const Graph& g, int ell, int K, int64_t max_colourings) {
    if (ell < 1) throw input_error("exact_check_all_colourings: ell must be >= 1");
    if (K < 1) throw input_error("exact_check_all_colourings: K must be >= 1");
    int64_t total = 1;
    for (int i = 0; i < g.n; ++i) {
        if (total > max_colourings / K)
            throw input_error("exact_check_all_colourings: K^n exceeds the budget of " +
                              std::to_string(max_colourings));
        total *= K;
    }
    if (g.n == 0) return true;

    RankedColouring col = RankedColouring::plain(std::vector<int>(g.n, 1));
    for (;;) {
        if (is_valid_ranking(g, ell, col)) return true;
        int i = 0;
        while (i < g.n && col.colours[i] == K) col.colours[i++] = 1;
        if (i == g.n) return false;
        ++col.colours[i];
    }
}

}  // namespace lvr
