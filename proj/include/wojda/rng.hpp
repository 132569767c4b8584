#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace wojda {

// splitmix64: tiny, seedable, good enough for sampling. All randomness in
// the library flows from an explicit 64-bit seed through this generator so
// every run is replayable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) {
        return bound ? next() % bound : 0;
    }

    int range(int lo, int hi) { // inclusive
        return lo + int(below(std::uint64_t(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

// derive an independent stream for (seed, index) pairs, e.g. one per
// phase-1 sample so parallel evaluation stays reproducible
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed ^ (0x517cc1b727220a95ull * (index + 1)));
    return r.next();
}

// seeded Fisher-Yates permutation of 0..n-1
inline std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        int j = int(rng.below(std::uint64_t(i) + 1));
        std::swap(p[i], p[j]);
    }
    return p;
}

} // namespace wojda
