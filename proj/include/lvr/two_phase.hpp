#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lvr/gstar.hpp"
#include "lvr/layering.hpp"
#include "lvr/maps.hpp"
#include "lvr/paths.hpp"
#include "lvr/verify.hpp"

namespace lvr {

// Pairwise-disjoint consecutive colour ranges: layer palette Phi_i holds the
// 2k colours layer_base(i)+1 .. layer_base(i)+2k, and the recolouring palette
// Phi_{q+1} is open-ended above all of them.
struct Palettes {
    int64_t k = 1;
    int q = 0;

    int64_t layer_base(int i) const { return 2 * k * i; }
    int64_t phase2_base() const { return 2 * k * (q + 1); }
};

// Derived parameters of the two-phase run. k is the subpalette size, M the
// per-vertex cap on newly created problematic paths, b the log exponent in k
// (0 when Delta^{floor(ell/2)-1} already dominates log2 n, else 1/4).
struct RankingParams {
    int n = 0;
    int ell = 2;
    int d = 1;
    int delta = 1;
    double b = 0.25;
    int64_t c_m = 0;
    uint64_t seed = 0;
    int64_t k = 1;
    int64_t M = 1;

    // c_m_override == 0 picks the default 2^{ell+1} d^{ceil(ell/2)}, which
    // makes M*k >= max |tau^{-1}(w)| hold; the inequality is still asserted
    // at the start of phase 1.
    static RankingParams derive(int n, int ell, int d, int delta, uint64_t seed,
                                int64_t c_m_override = 0);
};

// Bookkeeping of phase 1: which family paths ended up with equal endpoint
// colours, how many were created at each colouring step, and (after phase 2
// selects them) the recoloured vertex set P.
struct ProblemState {
    std::vector<int32_t> problematic_paths;  // ids into the restricted family
    std::vector<int64_t> created_at;         // per vertex
    std::vector<int> problem_vertices;       // P, sorted; filled by phase2_recolour
};

struct Phase1Result {
    RankedColouring colouring;
    ProblemState state;
    int64_t max_tau_load = 0;
    int64_t max_created = 0;
};

// Colours every vertex from its layer palette, processing vertices in the
// multigraph colouring order and drawing uniformly from the k least-loaded
// palette colours. Each step creates at most M problematic paths.
Phase1Result phase1_colour(const Graph& g, int ell, const RankingParams& params,
                           const Palettes& pal, const Layering& lay, const PathFamily& famP,
                           const EndpointMap& tau, const DegeneracyOrder& colour_order);

// Recolours P = gamma(problematic paths) greedily along a degeneracy order of
// G^ell[P] using colours above phase2_base(). Returns the number of distinct
// phase-2 colours used and records P in the state.
int64_t phase2_recolour(const Graph& g, int ell, RankedColouring& col, ProblemState& state,
                        const EndpointMap& gamma, const Palettes& pal);

struct RankingStats {
    int n = 0;
    int ell = 0;
    int d_supplied = 0;
    int d_used = 0;
    int delta = 0;
    double b = 0;
    int64_t k = 0;
    int64_t M = 0;
    int q = 0;
    int64_t colours_total = 0;
    int64_t colours_phase1 = 0;
    int64_t colours_phase2 = 0;
    int64_t colours_split = 0;
    int64_t p_size = 0;
    int64_t max_tau_load = 0;
    int64_t max_created = 0;
    uint64_t seed = 0;
};

struct RankOptions {
    int64_t c_m = 0;  // 0: default constant
    EnumerateOptions enumerate;
};

struct RankingResult {
    RankedColouring colouring;
    RankingStats stats;
    std::vector<int> problem_vertices;  // P, in the input graph's vertex ids
    std::vector<int> split_vertices;    // S (rank_degenerate only)
    std::vector<int> core_vertices;     // vertices handed to the two-phase core
    std::vector<std::string> warnings;
};

// Two-phase ranking for graphs of max degree <= delta. ell == 1 dispatches to
// a plain greedy proper colouring. The output always passes the verifier; a
// failure there is an algorithm bug and raises logic_error with the witness.
RankingResult rank_bounded_degree(const Graph& g, int ell, int d, int delta, uint64_t seed,
                                  const RankOptions& opts = {});

// Ranking for d-degenerate graphs: splits off vertices of degree >=
// Delta(n, ell), runs rank_bounded_degree on the rest and gives each split
// vertex a fresh colour above everything else.
RankingResult rank_degenerate(const Graph& g, int ell, int d, uint64_t seed,
                              const RankOptions& opts = {});

// The degree threshold used by rank_degenerate:
// max(d, 1, floor(n^{1/(floor(ell/2)+1/2)} * (log2 n)^{-5/6})).
int degree_split_threshold(int n, int ell, int d);

}  // namespace lvr
