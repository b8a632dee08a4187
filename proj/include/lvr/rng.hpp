#pragma once

#include <cstdint>

namespace lvr {

// SplitMix64 generator. Cheap to seed, so we use one independent stream per
// random decision site: stream(seed, i) gives the i-th substream.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound). bound must be > 0.
    uint64_t next_below(uint64_t bound) {
        uint64_t threshold = (-bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Substream derived from (seed, index); streams for distinct indices are
    // decorrelated by running the parent state through one mixing step.
    static SplitMix64 stream(uint64_t seed, uint64_t index) {
        SplitMix64 parent(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
        return SplitMix64(parent.next());
    }

private:
    uint64_t state_;
};

}  // namespace lvr
