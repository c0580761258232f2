#pragma once

#include <cstdint>

namespace ineqforge {

// Counter-based pseudorandom stream. Every draw is a pure function of
// (seed, counter), so sample i of a run with budget N is identical to
// sample i of a run with budget N+k: streams are prefix-stable under
// budget extension, which the search module's monotone-budget guarantee
// relies on.
//
// The mixer is splitmix64; output doubles lie in [0, 1).
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t counter)
        : state_(mix(seed ^ 0x9e3779b97f4a7c15ull) ^ mix(counter + 0x2545f4914f6cdd1dull)) {}

    // Next uniform double in [0, 1).
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform double in [lo, hi).
    double next_in(double lo, double hi) {
        return lo + (hi - lo) * next_unit();
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    // Uniform index in [0, n); n must be >= 1.
    std::size_t next_index(std::size_t n) {
        auto idx = static_cast<std::size_t>(next_unit() * static_cast<double>(n));
        return idx >= n ? n - 1 : idx;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace ineqforge
