#pragma once

#include <cstdint>

namespace inclab {

/// SplitMix64 (Steele, Lea, Flood 2014): a fixed permutation-based generator.
/// Every piece of randomness in the library flows through this type so that a
/// single 64-bit seed reproduces a run bit-for-bit on any platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound); unbiased via rejection of the top remainder.
    std::uint64_t bounded(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % bound;
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

/// SplitMix64 output function applied once; used to derive substream seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Independent substream `index` of the stream identified by `seed`.
/// Substreams are what make parallel trial loops order-independent.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1)));
}

}  // namespace inclab
