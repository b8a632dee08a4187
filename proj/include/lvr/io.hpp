#pragma once

#include <string>
#include <vector>

#include "lvr/exact.hpp"
#include "lvr/two_phase.hpp"
#include "lvr/verify.hpp"

namespace lvr {

// Colouring JSON:
// { n, ell, d, delta, k, M, b, q, colours: [...], palette_tags: [...],
//   counts: {phase1, phase2, split}, seed }
// palette_tags entries are "L<i>" (phase-1 layer i), "P2", "S" or "?".
std::string colouring_json(const RankingResult& res);

// Accepts either the colouring JSON above or plain text with one integer
// colour per line (line i = colour of vertex i).
RankedColouring read_colouring_file(const std::string& path, int expected_n);

// { value, witness, nodes_explored, exhaustive }
std::string exact_result_json(const ExactResult& res);

// [{ "path": [...], "colours": [...] }, ...]
std::string violations_json(const std::vector<Violation>& vs, const RankedColouring& col);

std::string palette_tag_string(int tag);

}  // namespace lvr
