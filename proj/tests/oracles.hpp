#pragma once

// Test-only oracles, deliberately independent of the library's path and
// ranking machinery.

#include <cstdint>
#include <vector>

#include "lvr/graph.hpp"
#include "lvr/rng.hpp"

namespace lvr::test {

// Counts undirected paths of length 1..ell by enumerating vertex tuples and
// checking consecutive adjacency. Exponential; n <= ~10.
int64_t count_paths_by_tuples(const Graph& g, int ell);

// The subgraph form of the ranking definition: every connected vertex subset
// whose induced subgraph has diameter <= ell needs a unique maximum colour.
// Qualifying subsets are precomputed so many colourings check cheaply.
class SubsetOracle {
public:
    SubsetOracle(const Graph& g, int ell);  // n <= 20
    bool valid(const std::vector<int>& colours) const;

private:
    int n_;
    std::vector<uint32_t> subsets_;
};

int chromatic_number_brute(const Graph& g);

// Minimum height of an elimination forest, by recursion over vertex subsets.
int treedepth_oracle(const Graph& g);  // n <= ~12

Graph random_tree(int n, SplitMix64& rng);
Graph random_connected_graph(int n, SplitMix64& rng);
Graph random_graph(int n, double p, SplitMix64& rng);
std::vector<int> random_colours(int n, int c_max, SplitMix64& rng);

}  // namespace lvr::test
