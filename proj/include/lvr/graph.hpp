#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lvr {

// Malformed user input: files, CLI values, violated call preconditions.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal consistency failure; indicates an algorithm bug, never bad input.
void internal_check(bool cond, const char* what);

// Simple undirected graph over dense vertex indices 0..n-1.
// Adjacency lists are sorted, duplicate-free and symmetric.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_) {}

    int64_t edge_count() const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;

    // Validates simplicity (no loops, no duplicates) and index range.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
};

// Induced subgraph on `vertices` (must be sorted and unique); vertex i of the
// result corresponds to vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Edge-list text format: first data line "n m", then m lines "u v" with
// 0-based endpoints. Blank lines and lines starting with '#' are ignored.
// Parse errors report 1-based line numbers.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g,
                     const std::string& header_comment = "");

}  // namespace lvr
