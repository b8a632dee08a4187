#include "lvr/verify.hpp"

#include <algorithm>
#include <sstream>

#include "lvr/paths.hpp"

namespace lvr {

namespace {

void check_coverage(const Graph& g, const RankedColouring& col) {
    if (static_cast<int>(col.colours.size()) != g.n)
        throw input_error("colouring does not cover the graph: " +
                          std::to_string(col.colours.size()) + " colours for " +
                          std::to_string(g.n) + " vertices");
    for (int v = 0; v < g.n; ++v)
        if (col.colours[v] < 1)
            throw input_error("vertex " + std::to_string(v) + " is uncoloured");
}

bool path_violates(std::span<const int> p, const std::vector<int>& colour) {
    int c = colour[p.front()];
    if (colour[p.back()] != c) return false;
    for (size_t i = 1; i + 1 < p.size(); ++i)
        if (colour[p[i]] > c) return false;
    return true;
}

}  // namespace

std::vector<Violation> find_violations(const Graph& g, int ell, const RankedColouring& col) {
    check_coverage(g, col);
    std::vector<Violation> out;
    for_each_path(g, ell, [&](std::span<const int> p) {
        if (path_violates(p, col.colours))
            out.push_back({{p.begin(), p.end()}, col.colours[p.front()]});
        return true;
    });
    return out;  // emission order is already canonical
}

bool is_valid_ranking(const Graph& g, int ell, const RankedColouring& col) {
    check_coverage(g, col);
    return for_each_path(g, ell, [&](std::span<const int> p) {
        return !path_violates(p, col.colours);
    });
}

std::string violations_report_text(const std::vector<Violation>& vs) {
    std::ostringstream ss;
    for (const auto& v : vs) {
        ss << "violation colour=" << v.colour << " path:";
        for (int x : v.path) ss << " " << x;
        ss << "\n";
    }
    return ss.str();
}

}  // namespace lvr
