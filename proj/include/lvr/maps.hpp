#pragma once

#include "lvr/degeneracy.hpp"
#include "lvr/gstar.hpp"
#include "lvr/paths.hpp"

namespace lvr {

// Assignment of each family path to one of its vertices.
//   rho:   an endpoint from which at least ceil(r/2) edges run downstream.
//   tau:   the endpoint later in a fixed colouring order.
//   gamma: the second vertex from the end whose tail has at most
//          floor(r/2)-1 upstream edges (r >= 2); an endpoint for r = 1.
struct EndpointMap {
    enum class Kind { rho, tau, gamma };
    Kind kind;
    std::vector<int> assignment;  // path id -> vertex

    std::vector<int64_t> loads(int n) const;
    int64_t max_load(int n) const;
};

// Downstream-majority endpoint assignment. If both traversal directions
// qualify, the canonical-form first endpoint wins. Bidirected arcs count as
// downstream either way.
EndpointMap rho_map(const PathFamily& fam, const Orientation& orient);

// Requires every family path to lie in P^_ell(gprime): its first edge enters
// the first endpoint and its last edge leaves towards the last endpoint
// (bidirected arcs satisfy both roles). Violations raise input_error naming
// the path.
EndpointMap gamma_map(const PathFamily& fam, const Orientation& gprime);

// Later endpoint under the given colouring order; |tau^{-1}(v)| equals the
// multigraph back-degree of v.
EndpointMap tau_map(const PathFamily& fam, const DegeneracyOrder& colour_order);

}  // namespace lvr
