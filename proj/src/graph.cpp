#include "lvr/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace lvr {

void internal_check(bool cond, const char* what) {
    if (!cond) throw std::logic_error(std::string("internal check failed: ") + what);
}

int64_t Graph::edge_count() const {
    int64_t total = 0;
    for (const auto& nbrs : adj) total += static_cast<int64_t>(nbrs.size());
    return total / 2;
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nbrs : adj) best = std::max(best, static_cast<int>(nbrs.size()));
    return best;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adj[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw input_error("vertex count must be non-negative");
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("edge endpoint out of range: " + std::to_string(u) + " " +
                              std::to_string(v));
        if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& nbrs = g.adj[v];
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw input_error("duplicate edge at vertex " + std::to_string(v));
    }
    return g;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> local(g.n, -1);
    for (size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.n) throw input_error("induced_subgraph: vertex out of range");
        if (local[v] != -1) throw input_error("induced_subgraph: duplicate vertex");
        local[v] = static_cast<int>(i);
    }
    Graph sub(static_cast<int>(vertices.size()));
    for (size_t i = 0; i < vertices.size(); ++i) {
        for (int w : g.adj[vertices[i]])
            if (local[w] != -1) sub.adj[i].push_back(local[w]);
        std::sort(sub.adj[i].begin(), sub.adj[i].end());
    }
    return sub;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw input_error("line " + std::to_string(line) + ": " + msg);
}

// Reads the next data line, skipping blanks and '#' comments. Returns false at EOF.
bool next_data_line(std::istream& in, std::string& out, int& line_no) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        out = line;
        return true;
    }
    return false;
}

bool parse_two_ints(const std::string& line, long long& a, long long& b) {
    std::istringstream ss(line);
    std::string rest;
    if (!(ss >> a >> b)) return false;
    if (ss >> rest) return false;
    return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    int line_no = 0;
    std::string line;
    if (!next_data_line(in, line, line_no)) throw input_error("empty input: expected \"n m\" header");
    long long n, m;
    if (!parse_two_ints(line, n, m)) parse_fail(line_no, "expected header \"n m\"");
    if (n < 0 || m < 0) parse_fail(line_no, "negative count in header");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line, line_no))
            throw input_error("unexpected end of input: " + std::to_string(m - i) +
                              " edge lines missing");
        long long u, v;
        if (!parse_two_ints(line, u, v)) parse_fail(line_no, "expected edge \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n) parse_fail(line_no, "edge endpoint out of range");
        if (u == v) parse_fail(line_no, "self-loop not allowed");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_data_line(in, line, line_no)) parse_fail(line_no, "trailing data after last edge");
    try {
        return Graph::from_edges(static_cast<int>(n), edges);
    } catch (const input_error& e) {
        throw input_error(std::string(e.what()) + " (while reading edge list)");
    }
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::string& header_comment) {
    if (!header_comment.empty()) out << "# " << header_comment << "\n";
    out << g.n << " " << g.edge_count() << "\n";
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v])
            if (v < w) out << v << " " << w << "\n";
}

}  // namespace lvr
