#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>

#include "lvr/graph.hpp"
#include "lvr/layering.hpp"

namespace lvr {

// Enumeration would exceed the configured memory budget.
class path_budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A set of undirected paths of length 1..ell, each stored once in canonical
// form (the lexicographically smaller of the vertex sequence and its
// reversal, i.e. first endpoint < last endpoint), sorted lexicographically.
// Storage is flat: path i occupies data[offsets[i] .. offsets[i+1]).
struct PathFamily {
    int n = 0;
    int ell = 0;
    std::vector<int> data;
    std::vector<uint32_t> offsets{0};
    std::vector<std::vector<int32_t>> endpoint_paths;  // per-vertex ids, as endpoint

    size_t size() const { return offsets.size() - 1; }
    std::span<const int> path(size_t i) const {
        return {data.data() + offsets[i], data.data() + offsets[i + 1]};
    }
    int length(size_t i) const { return static_cast<int>(offsets[i + 1] - offsets[i]) - 1; }
    int endpoint_a(size_t i) const { return data[offsets[i]]; }
    int endpoint_b(size_t i) const { return data[offsets[i + 1] - 1]; }
};

struct EnumerateOptions {
    int64_t budget_bytes = 0;  // 0: use default_path_budget_bytes()
    std::function<void(const std::string&)> warn;  // size-prediction warnings
};

// LVR_MEM_BUDGET_MB if set, otherwise 512 MiB.
int64_t default_path_budget_bytes();

// Visits every canonical path of length 1..ell in lexicographic order.
// The visitor receives the vertex sequence and returns false to stop early;
// for_each_path returns false iff a visitor stopped the walk.
template <typename Visitor>
bool for_each_path(const Graph& g, int ell, Visitor&& visit) {
    if (ell < 1) throw input_error("path enumeration: ell must be >= 1");
    std::vector<int> path;
    path.reserve(ell + 1);
    std::vector<char> on_path(g.n, 0);

    // DFS over simple extensions; adjacency order keeps emission lexicographic.
    auto extend = [&](auto&& self, int last) -> bool {
        for (int w : g.adj[last]) {
            if (on_path[w]) continue;
            path.push_back(w);
            on_path[w] = 1;
            bool keep_going = true;
            if (path.front() < w)
                keep_going = visit(std::span<const int>(path.data(), path.size()));
            if (keep_going && static_cast<int>(path.size()) <= ell)
                keep_going = self(self, w);
            on_path[w] = 0;
            path.pop_back();
            if (!keep_going) return false;
        }
        return true;
    };

    for (int v = 0; v < g.n; ++v) {
        path.assign(1, v);
        on_path[v] = 1;
        bool keep_going = extend(extend, v);
        on_path[v] = 0;
        if (!keep_going) return false;
    }
    return true;
}

// The full family of undirected paths of length at most ell.
PathFamily enumerate_paths(const Graph& g, int ell, const EnumerateOptions& opts = {});

// The subfamily whose endpoints share a layer L_j and whose interior vertices
// all lie in layers <= j.
PathFamily enumerate_restricted_family(const Graph& g, int ell, const Layering& lay,
                                       const EnumerateOptions& opts = {});

// One path per line, space-separated vertex indices, canonical order.
void dump_paths(std::ostream& out, const PathFamily& fam);

}  // namespace lvr
