#pragma once

#include "lvr/degeneracy.hpp"
#include "lvr/graph.hpp"

namespace lvr {

// Halving decomposition driven by the survivor recursion
//   S_0 = V,  S_i = { v in S_{i-1} : deg in G[S_{i-1}] >= 4d },
// with layers L_i = S_i \ S_{i+1}. For a d-degenerate graph the survivor sets
// halve, so q <= log2 n.
struct Layering {
    std::vector<int> layer;              // per-vertex layer index, 0..q
    int q = 0;
    std::vector<int64_t> survivor_sizes; // |S_0| .. |S_q|
    bool halving_held = true;            // 2|S_i| <= |S_{i-1}| for all i >= 1
};

// Terminates for any input: if the survivor set ever stops shrinking (possible
// only when g is not d-degenerate) the recursion is cut there and
// halving_held reports false.
Layering compute_layering(const Graph& g, int d);

// Directed auxiliary graph over g: arc v->w present iff vw is an edge and
// layer(v) <= layer(w); same-layer edges are bidirected. When the layering
// came from compute_layering(g, d) the max out-degree is < 4d.
Orientation build_g_prime(const Graph& g, const Layering& lay);

}  // namespace lvr
