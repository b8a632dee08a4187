#pragma once

#include "lvr/degeneracy.hpp"
#include "lvr/paths.hpp"

namespace lvr {

// Multigraph over the base vertex set whose edge multiplicity m(v,w) is the
// number of family paths with endpoints v and w. Parallel edges are never
// materialized; multiplicities can reach Theta(Delta^{floor(ell/2)}).
struct MultigraphGStar {
    int n = 0;
    std::vector<std::vector<std::pair<int, int64_t>>> adj;  // (neighbour, multiplicity), sorted
    std::vector<int64_t> degree;                            // sum of incident multiplicities

    int64_t multiplicity(int v, int w) const;
};

MultigraphGStar build_g_star(const Graph& g, const PathFamily& fam);

// Min-degree peel of the multigraph, returned in colouring order: order[a]
// has at most `degeneracy` multigraph edges into order[0..a). This is the
// reverse of the elimination convention used by degeneracy_order().
DegeneracyOrder greedy_degeneracy_order_multigraph(const MultigraphGStar& gs);

}  // namespace lvr
