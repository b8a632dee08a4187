#include "lvr/maps.hpp"

#include <algorithm>
#include <sstream>

namespace lvr {

std::vector<int64_t> EndpointMap::loads(int n) const {
    std::vector<int64_t> load(n, 0);
    for (int v : assignment) ++load[v];
    return load;
}

int64_t EndpointMap::max_load(int n) const {
    auto load = loads(n);
    return load.empty() ? 0 : *std::max_element(load.begin(), load.end());
}

namespace {

// Downstream edges seen when traversing p front to back (bidirected counts).
int count_downstream(std::span<const int> p, const Orientation& o) {
    int down = 0;
    for (size_t i = 1; i < p.size(); ++i)
        if (o.has_arc(p[i - 1], p[i])) ++down;
    return down;
}

std::string path_to_string(std::span<const int> p) {
    std::ostringstream ss;
    for (size_t i = 0; i < p.size(); ++i) ss << (i ? " " : "") << p[i];
    return ss.str();
}

}  // namespace

EndpointMap rho_map(const PathFamily& fam, const Orientation& orient) {
    if (fam.n != orient.n) throw input_error("rho_map: orientation does not match family");
    EndpointMap map;
    map.kind = EndpointMap::Kind::rho;
    map.assignment.resize(fam.size());
    for (size_t i = 0; i < fam.size(); ++i) {
        auto p = fam.path(i);
        int r = static_cast<int>(p.size()) - 1;
        int need = (r + 1) / 2;
        int fwd = count_downstream(p, orient);
        int bwd = 0;
        for (size_t j = p.size(); j-- > 1;)
            if (orient.has_arc(p[j], p[j - 1])) ++bwd;
        internal_check(fwd >= need || bwd >= need, "rho_map: no downstream-majority endpoint");
        map.assignment[i] = fwd >= need ? p.front() : p.back();
    }
    return map;
}

EndpointMap gamma_map(const PathFamily& fam, const Orientation& gprime) {
    if (fam.n != gprime.n) throw input_error("gamma_map: orientation does not match family");
    EndpointMap map;
    map.kind = EndpointMap::Kind::gamma;
    map.assignment.resize(fam.size());
    for (size_t i = 0; i < fam.size(); ++i) {
        auto p = fam.path(i);
        int r = static_cast<int>(p.size()) - 1;
        // Membership in P^_ell(gprime) is symmetric under reversal: the first
        // edge must enter the front vertex and the last must leave into the
        // back vertex.
        if (!gprime.has_arc(p[1], p[0]) || !gprime.has_arc(p[p.size() - 2], p.back()))
            throw input_error("gamma_map: path not admissible in G': " + path_to_string(p));
        if (r == 1) {
            map.assignment[i] = p.front();
            continue;
        }
        // Tail v_1..v_r from the front end vs. v_{r-1}..v_0 from the back end;
        // pick the end whose tail has at most floor(r/2)-1 upstream edges.
        int up_front = 0;
        for (size_t j = 2; j < p.size(); ++j)
            if (!gprime.has_arc(p[j - 1], p[j])) ++up_front;
        int up_back = 0;
        for (size_t j = p.size() - 2; j-- > 0;)
            if (!gprime.has_arc(p[j + 1], p[j])) ++up_back;
        int allowed = r / 2 - 1;
        internal_check(up_front <= allowed || up_back <= allowed,
                       "gamma_map: no admissible traversal end");
        map.assignment[i] = up_front <= allowed ? p[1] : p[p.size() - 2];
    }
    return map;
}

EndpointMap tau_map(const PathFamily& fam, const DegeneracyOrder& colour_order) {
    if (static_cast<int>(colour_order.order.size()) != fam.n)
        throw input_error("tau_map: order does not cover the family's vertex set");
    std::vector<int> pos(fam.n);
    for (int i = 0; i < fam.n; ++i) pos[colour_order.order[i]] = i;
    EndpointMap map;
    map.kind = EndpointMap::Kind::tau;
    map.assignment.resize(fam.size());
    for (size_t i = 0; i < fam.size(); ++i) {
        int a = fam.endpoint_a(i);
        int b = fam.endpoint_b(i);
        map.assignment[i] = pos[a] > pos[b] ? a : b;
    }
    return map;
}

}  // namespace lvr
