#pragma once

#include <cstdint>

namespace gdet {

// SplitMix64 (Steele, Lea, Flood; constants from Vigna's reference
// implementation). Every draw is a pure function of a 64-bit state, so
// the generator is index-splittable: stream i of a run seeded with s is
// SplitMix64(mix(s, i)), and summaries are reproducible across platforms
// and across any partitioning of the work into threads.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Independent substream for item `index` of the run seeded `seed`.
    static SplitMix64 for_index(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mixer(seed ^ (index * 0xA24BAED4963EE407ULL + 0x9FB21C651E98DF25ULL));
        return SplitMix64(mixer.next());
    }

    // Uniform draw in [0, bound), unbiased via rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    // Uniform draw in the closed interval [lo, hi].
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next_below(span));
    }
};

}  // namespace gdet
