#pragma once

#include <string>
#include <vector>

#include "lvr/graph.hpp"

namespace lvr {

// Vertex colouring with palette provenance tags. Colours are >= 1. A tag is
// the layer index of the phase-1 palette the colour came from, TAG_PHASE2 for
// recoloured vertices, TAG_SPLIT for split-off high-degree vertices, or
// TAG_NONE when unknown (external colourings).
struct RankedColouring {
    static constexpr int TAG_NONE = -1;
    static constexpr int TAG_PHASE2 = -2;
    static constexpr int TAG_SPLIT = -3;

    std::vector<int> colours;
    std::vector<int> tags;

    static RankedColouring plain(std::vector<int> colours_) {
        RankedColouring c;
        c.tags.assign(colours_.size(), TAG_NONE);
        c.colours = std::move(colours_);
        return c;
    }
};

// A path whose endpoints share the maximum colour on the path.
struct Violation {
    std::vector<int> path;  // canonical vertex sequence
    int colour = 0;         // the shared endpoint colour
};

// All ell-violations of the colouring, in canonical path order. Empty iff the
// colouring is an ell-vertex-ranking.
std::vector<Violation> find_violations(const Graph& g, int ell, const RankedColouring& col);

bool is_valid_ranking(const Graph& g, int ell, const RankedColouring& col);

std::string violations_report_text(const std::vector<Violation>& vs);

}  // namespace lvr
