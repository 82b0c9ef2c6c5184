#pragma once

#include <cstdint>

namespace kakeya {

// SplitMix64 (Steele, Lea & Vigna). One 64-bit word of state, one
// multiply-xorshift finalizer per output. Chosen because every stream is
// bit-reproducible from its seed on any platform, which is what the
// determinism contracts here rest on.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// SplitMix64 output finalizer applied to a bare word.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Stated stream-derivation function: substream `index` of `seed` is seeded
// with mix64(seed + (index+1) * golden gamma). Used for per-trial and
// per-class streams so that results are independent of evaluation order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

// Uniform draw on [0, bound) by rejection; no modulo bias.
inline std::uint32_t uniform_below(SplitMix64& gen, std::uint32_t bound) {
    // 2^64 mod bound; draws at or above 2^64 - rem are rejected.
    const std::uint64_t rem = (UINT64_MAX % bound + 1) % bound;
    for (;;) {
        std::uint64_t u = gen.next();
        if (u <= UINT64_MAX - rem) return static_cast<std::uint32_t>(u % bound);
    }
}

}  // namespace kakeya
