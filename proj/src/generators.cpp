#include "lvr/generators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lvr/degeneracy.hpp"
#include "lvr/rng.hpp"

namespace lvr {

Family family_from_string(const std::string& name) {
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "tree") return Family::tree;
    if (name == "grid") return Family::grid;
    if (name == "hypercube") return Family::hypercube;
    if (name == "random_d_degenerate") return Family::random_d_degenerate;
    if (name == "random_d_degenerate_bounded_degree")
        return Family::random_d_degenerate_bounded_degree;
    throw input_error("unknown graph family: " + name);
}

std::string family_to_string(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::tree: return "tree";
        case Family::grid: return "grid";
        case Family::hypercube: return "hypercube";
        case Family::random_d_degenerate: return "random_d_degenerate";
        case Family::random_d_degenerate_bounded_degree:
            return "random_d_degenerate_bounded_degree";
    }
    return "?";
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// count distinct values from eligible[0..pool) via partial Fisher-Yates.
std::vector<int> sample_without_replacement(std::vector<int>& eligible, int count,
                                            SplitMix64& rng) {
    std::vector<int> picked;
    int pool = static_cast<int>(eligible.size());
    count = std::min(count, pool);
    for (int i = 0; i < count; ++i) {
        int j = static_cast<int>(rng.next_below(static_cast<uint64_t>(pool - i))) + i;
        std::swap(eligible[i], eligible[j]);
        picked.push_back(eligible[i]);
    }
    return picked;
}

Graph gen_random_degenerate(const GenSpec& spec, bool bounded) {
    if (spec.n < 0) throw input_error("generator: n must be non-negative");
    if (spec.d < 1) throw input_error("generator: d must be >= 1");
    if (bounded && spec.delta < spec.d)
        throw input_error("generator: delta must be >= d for the bounded-degree family");

    SplitMix64 rng(spec.seed);
    EdgeList edges;
    std::vector<int> degree(spec.n, 0);
    std::vector<int> eligible;
    for (int v = 1; v < spec.n; ++v) {
        eligible.clear();
        for (int u = 0; u < v; ++u) {
            if (bounded && degree[u] >= spec.delta) continue;
            eligible.push_back(u);
        }
        // A saturated neighbourhood simply yields fewer back-edges.
        int want = bounded ? std::min(spec.d, spec.delta - degree[v]) : spec.d;
        for (int u : sample_without_replacement(eligible, want, rng)) {
            edges.emplace_back(u, v);
            ++degree[u];
            ++degree[v];
        }
    }
    return Graph::from_edges(spec.n, edges);
}

}  // namespace

Graph generate(const GenSpec& spec) {
    Graph g;
    switch (spec.family) {
        case Family::path: {
            if (spec.n < 0) throw input_error("generator: n must be non-negative");
            EdgeList edges;
            for (int v = 1; v < spec.n; ++v) edges.emplace_back(v - 1, v);
            g = Graph::from_edges(spec.n, edges);
            break;
        }
        case Family::cycle: {
            if (spec.n < 3) throw input_error("generator: cycle needs n >= 3");
            EdgeList edges;
            for (int v = 1; v < spec.n; ++v) edges.emplace_back(v - 1, v);
            edges.emplace_back(spec.n - 1, 0);
            g = Graph::from_edges(spec.n, edges);
            break;
        }
        case Family::tree: {
            if (spec.n < 0) throw input_error("generator: n must be non-negative");
            SplitMix64 rng(spec.seed);
            EdgeList edges;
            for (int v = 1; v < spec.n; ++v)
                edges.emplace_back(static_cast<int>(rng.next_below(v)), v);
            g = Graph::from_edges(spec.n, edges);
            break;
        }
        case Family::grid: {
            if (spec.n < 0) throw input_error("generator: n must be non-negative");
            int rows = std::max(1, static_cast<int>(std::floor(std::sqrt((double)spec.n))));
            int cols = (spec.n + rows - 1) / std::max(1, rows);
            EdgeList edges;
            for (int v = 0; v < spec.n; ++v) {
                int r = v / cols, c = v % cols;
                if (c + 1 < cols && v + 1 < spec.n) edges.emplace_back(v, v + 1);
                if ((r + 1) * cols + c < spec.n) edges.emplace_back(v, v + cols);
            }
            g = Graph::from_edges(spec.n, edges);
            break;
        }
        case Family::hypercube: {
            if (spec.n < 0 || spec.n > 20) throw input_error("generator: hypercube dimension out of range");
            int n = 1 << spec.n;
            EdgeList edges;
            for (int v = 0; v < n; ++v)
                for (int bit = 0; bit < spec.n; ++bit)
                    if (!(v & (1 << bit))) edges.emplace_back(v, v | (1 << bit));
            g = Graph::from_edges(n, edges);
            break;
        }
        case Family::random_d_degenerate:
            g = gen_random_degenerate(spec, false);
            break;
        case Family::random_d_degenerate_bounded_degree:
            g = gen_random_degenerate(spec, true);
            break;
    }

    // In-family post-checks.
    switch (spec.family) {
        case Family::random_d_degenerate_bounded_degree:
            internal_check(g.max_degree() <= spec.delta, "generated graph exceeds delta");
            [[fallthrough]];
        case Family::random_d_degenerate:
            internal_check(degeneracy_order(g).degeneracy <= spec.d,
                           "generated graph exceeds degeneracy d");
            break;
        case Family::tree:
        case Family::path:
            internal_check(g.n == 0 || degeneracy_order(g).degeneracy <= 1,
                           "tree-like family not 1-degenerate");
            break;
        default:
            break;
    }
    return g;
}

std::string genspec_json(const GenSpec& spec) {
    std::ostringstream ss;
    ss << "{\"family\":\"" << family_to_string(spec.family) << "\",\"n\":" << spec.n
       << ",\"d\":" << spec.d << ",\"delta\":" << spec.delta << ",\"seed\":" << spec.seed << "}";
    return ss.str();
}

}  // namespace lvr
