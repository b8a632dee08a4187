#pragma once

#include <cstdint>

#include "lvr/graph.hpp"
#include "lvr/verify.hpp"

namespace lvr {

struct ExactLimits {
    int64_t max_nodes = 20'000'000;  // branch-and-bound node budget
};

// Result of the exhaustive search. When the budget runs out before the search
// is complete, exhaustive is false and value is the best upper bound found so
// far (at worst n, witnessed by the all-distinct colouring).
struct ExactResult {
    int value = 0;
    RankedColouring witness;
    int64_t nodes_explored = 0;
    bool exhaustive = true;
};

// Minimum number of colours in an ell-vertex-ranking, by branch and bound over
// colour assignments in {1..K} for increasing K. Prunes on fully-coloured
// violating paths and on branches that can no longer use all K values (sound
// because rankings only tolerate order-preserving relabellings, so a solution
// first appearing at level K uses K distinct values). Practical up to n ~ 14
// for ell = 2.
ExactResult exact_ranking_number(const Graph& g, int ell, const ExactLimits& limits = {});

// Plain enumeration cross-check: true iff some colouring with colours in
// {1..K} is a valid ell-vertex-ranking. Refuses (input_error) when K^n
// exceeds max_colourings.
bool exact_check_all_colourings(const Graph& g, int ell, int K,
                                int64_t max_colourings = 100'000'000);

}  // namespace lvr
