#pragma once

#include "lvr/graph.hpp"

namespace lvr {

// The ell-th power of a base graph: vw is an edge iff some path with at most
// ell edges in the base contains both v and w (equivalently, 0 < dist <= ell).
struct PowerGraph {
    int ell = 1;
    Graph graph;
};

PowerGraph power_graph(const Graph& g, int ell);

// Vertices at distance 1..ell from v, ascending.
std::vector<int> ball_around(const Graph& g, int v, int ell);

}  // namespace lvr
