#include "lvr/paths.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "lvr/degeneracy.hpp"

namespace lvr {

int64_t default_path_budget_bytes() {
    static const int64_t value = [] {
        if (const char* env = std::getenv("LVR_MEM_BUDGET_MB")) {
            char* end = nullptr;
            long long mb = std::strtoll(env, &end, 10);
            if (end && *end == '\0' && mb > 0) return mb * 1024 * 1024;
        }
        return 512LL * 1024 * 1024;
    }();
    return value;
}

namespace {

constexpr int64_t kSaturated = INT64_MAX / 2;

int64_t mul_saturating(int64_t a, int64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

int64_t pow_saturating(int64_t base, int exp) {
    int64_t r = 1;
    while (exp-- > 0) r = mul_saturating(r, base);
    return r;
}

// Bytes per stored path: vertex data plus offset plus two endpoint-index slots.
int64_t bytes_per_path(int ell) { return 4LL * (ell + 1) + 4 + 8; }

template <typename Filter>
PathFamily collect_paths(const Graph& g, int ell, const EnumerateOptions& opts,
                         Filter&& keep) {
    const int64_t budget = opts.budget_bytes > 0 ? opts.budget_bytes : default_path_budget_bytes();

    if (opts.warn) {
        // Predicted |P_ell| <= n * 2^{ell+1} * d^{ceil(ell/2)} * Delta^{floor(ell/2)}
        int64_t d = degeneracy_order(g).degeneracy;
        int64_t delta = g.max_degree();
        int64_t predicted = mul_saturating(g.n, pow_saturating(2, ell + 1));
        predicted = mul_saturating(predicted, pow_saturating(d, (ell + 1) / 2));
        predicted = mul_saturating(predicted, pow_saturating(delta, ell / 2));
        if (predicted > budget / bytes_per_path(ell))
            opts.warn("predicted path count " + std::to_string(predicted) +
                      " may exceed the memory budget of " + std::to_string(budget) + " bytes");
    }

    PathFamily fam;
    fam.n = g.n;
    fam.ell = ell;
    int64_t bytes = 0;
    for_each_path(g, ell, [&](std::span<const int> p) {
        if (!keep(p)) return true;
        bytes += bytes_per_path(ell);
        if (bytes > budget)
            throw path_budget_exceeded("path family exceeds memory budget of " +
                                       std::to_string(budget) + " bytes (set LVR_MEM_BUDGET_MB)");
        if (fam.data.size() + p.size() > UINT32_MAX)
            throw path_budget_exceeded("path family exceeds the 32-bit storage limit");
        fam.data.insert(fam.data.end(), p.begin(), p.end());
        fam.offsets.push_back(static_cast<uint32_t>(fam.data.size()));
        return true;
    });

    fam.endpoint_paths.resize(g.n);
    for (size_t i = 0; i < fam.size(); ++i) {
        fam.endpoint_paths[fam.endpoint_a(i)].push_back(static_cast<int32_t>(i));
        fam.endpoint_paths[fam.endpoint_b(i)].push_back(static_cast<int32_t>(i));
    }
    return fam;
}

}  // namespace

PathFamily enumerate_paths(const Graph& g, int ell, const EnumerateOptions& opts) {
    return collect_paths(g, ell, opts, [](std::span<const int>) { return true; });
}

PathFamily enumerate_restricted_family(const Graph& g, int ell, const Layering& lay,
                                       const EnumerateOptions& opts) {
    if (static_cast<int>(lay.layer.size()) != g.n)
        throw input_error("enumerate_restricted_family: layering does not cover the graph");
    return collect_paths(g, ell, opts, [&](std::span<const int> p) {
        int j = lay.layer[p.front()];
        if (lay.layer[p.back()] != j) return false;
        for (size_t i = 1; i + 1 < p.size(); ++i)
            if (lay.layer[p[i]] > j) return false;
        return true;
    });
}

void dump_paths(std::ostream& out, const PathFamily& fam) {
    for (size_t i = 0; i < fam.size(); ++i) {
        auto p = fam.path(i);
        for (size_t j = 0; j < p.size(); ++j) out << (j ? " " : "") << p[j];
        out << "\n";
    }
}

}  // namespace lvr
