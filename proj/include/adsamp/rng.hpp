#pragma once

// Deterministic 64-bit random streams. A sampling run addresses streams by
// integer index, so the generator must be a pure function of (seed, index)
// and cheap to reseed.

#include <cstdint>

namespace adsamp {

/// Stafford mix13 finalizer (the splitmix64 output function).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

/// splitmix64: tiny, fast, and trivially reseedable. One instance per thread
/// (or per state frame in the deterministic engine); never shared.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix64(state_);
    }

    /// Unbiased draw from [0, bound) via rejection (Lemire's method).
    std::uint64_t next_below(std::uint64_t bound) noexcept {
        __uint128_t m = static_cast<__uint128_t>(next()) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (lo < threshold) {
                m = static_cast<__uint128_t>(next()) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::uint64_t state_;
};

/// Stream seed for a given frame index. Distinct indices must yield distinct,
/// uncorrelated streams for any fixed base seed; the result depends on
/// nothing else.
constexpr std::uint64_t reseed(std::uint64_t base_seed, std::uint64_t frame_index) noexcept {
    return mix64(base_seed ^ (frame_index * 0x9E3779B97F4A7C15ull));
}

inline SplitMix64 stream_rng(std::uint64_t base_seed, std::uint64_t frame_index) noexcept {
    return SplitMix64(reseed(base_seed, frame_index));
}

} // namespace adsamp
