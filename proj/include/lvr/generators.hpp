#pragma once

#include <cstdint>
#include <string>

#include "lvr/graph.hpp"

namespace lvr {

enum class Family {
    path,
    cycle,
    tree,
    grid,
    hypercube,
    random_d_degenerate,
    random_d_degenerate_bounded_degree,
};

Family family_from_string(const std::string& name);
std::string family_to_string(Family f);

// Instance description. n is the vertex count, except for hypercube where it
// is the dimension. d and delta apply to the random families.
struct GenSpec {
    Family family = Family::path;
    int n = 0;
    int d = 1;
    int delta = 0;
    uint64_t seed = 0;
};

// Deterministic per (spec, seed). Random d-degenerate graphs are built by
// inserting vertices in order, each picking up to d distinct earlier
// neighbours uniformly; the bounded-degree variant only picks among earlier
// vertices whose degree is still below delta. Generated graphs are
// post-checked against the family's promise.
Graph generate(const GenSpec& spec);

// Spec echo used as the '#' header line of emitted edge lists.
std::string genspec_json(const GenSpec& spec);

}  // namespace lvr
