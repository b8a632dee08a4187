#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lvr/generators.hpp"
#include "lvr/two_phase.hpp"

namespace lvr {

// One verified benchmark run. Records are emitted as CSV rows; re-running with
// the same specs and seeds reproduces the rows byte for byte except for the
// trailing wall_ms column.
struct ExperimentRecord {
    GenSpec spec;
    int ell = 2;
    uint64_t seed = 0;
    RankingStats stats;
    int64_t split_count = 0;
    int64_t max_out_p = 0;   // max over vertices p of |N_H^+(p) cap P| on the core
    double tail_ratio = 0;   // max_out_p / (k * log2 n_core)
    bool valid = false;
    int64_t wall_ms = 0;
    std::string error;

    std::string csv_row() const;
};

std::string experiment_csv_header();

// Runs one trial: generates the instance, ranks it (rank_bounded_degree when
// the spec carries a positive delta with the bounded-degree family, otherwise
// rank_degenerate) and measures the phase-2 load statistic on the core graph.
ExperimentRecord run_rank_trial(const GenSpec& spec, int ell);

// max over all vertices p of H of |N_H^+(p) cap P|, where H is the acyclic
// orientation of core^ell induced by its degeneracy order.
int64_t max_out_neighbours_in_p(const Graph& core, int ell, const std::vector<int>& p_local);

// Normalizer n^{1 - 1/(floor(ell/2)+1/2)} * log2 n for the scaling summary.
double scaling_normalizer(int n, int ell);

struct BenchResult {
    std::string csv;
    bool all_valid = true;
    std::vector<ExperimentRecord> records;
    std::string first_failure;  // witness text when a trial failed
};

// Grid over n: `seeds` trials per size with seeds seed_base..seed_base+seeds-1.
// Appends one summary row per n with the median colour count and the
// normalized ratio.
BenchResult bench_scaling(Family family, int d, int ell, const std::vector<int>& ns, int seeds,
                          uint64_t seed_base, int threads = 0);

// `trials` runs of one spec with seeds seed_base..; rows carry the tail
// statistic and its ratio to k*log2 n.
BenchResult bench_tail(const GenSpec& spec, int ell, int trials, uint64_t seed_base,
                       int threads = 0);

}  // namespace lvr
