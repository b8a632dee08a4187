#pragma once

#include "lvr/graph.hpp"

namespace lvr {

// Vertex order certifying a degeneracy value.
//
// degeneracy_order() returns the min-degree elimination order: order[i] has at
// most `degeneracy` neighbours among order[i+1..n-1], and `degeneracy` is
// minimal. greedy_degeneracy_order_multigraph() (gstar.hpp) returns the same
// certificate in colouring order, i.e. back-degree bounded; see its docs.
struct DegeneracyOrder {
    std::vector<int> order;
    int64_t degeneracy = 0;
};

// Min-degree peeling; ties broken by lowest vertex index, so the result is
// deterministic.
DegeneracyOrder degeneracy_order(const Graph& g);

// Edge directions over the vertex set of some base graph. An edge may carry
// one direction or both (bidirected); out[v] lists heads of arcs leaving v,
// sorted. A bidirected edge contributes to the out-degree of both endpoints.
struct Orientation {
    int n = 0;
    std::vector<std::vector<int>> out;
    int64_t max_out_degree = 0;

    bool has_arc(int u, int v) const;  // arc u -> v present (bidirected counts)
};

// Directs every edge from its earlier endpoint in ord to the later one.
// The resulting max out-degree is at most ord.degeneracy.
Orientation orient_acyclic(const Graph& g, const DegeneracyOrder& ord);

// Greedy proper colouring: processes `order` front to back and gives each
// vertex the smallest colour > base unused on its already-coloured neighbours.
std::vector<int> greedy_colour_along(const Graph& g, const std::vector<int>& order,
                                     int base = 0);

}  // namespace lvr
