#pragma once

#include <cstdint>

namespace qgb {

/// Counter-based per-shot random stream. The origin is a 64-bit hash of
/// (seed, shot_index) and each draw advances a splitmix64 sequence from
/// there, so shots can run in any order or in parallel without changing
/// a single outcome.
class ShotRng {
public:
    ShotRng(std::uint64_t seed, std::uint64_t shot_index)
        : state_(mix(mix(seed + kGolden) ^ (shot_index * kCounterStride + kCounterOffset))) {}

    std::uint64_t next_u64() {
        state_ += kGolden;
        return mix(state_);
    }

    /// Uniform double in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
    static constexpr std::uint64_t kCounterStride = 0xD1B54A32D192ED03ull;
    static constexpr std::uint64_t kCounterOffset = 0x8CB92BA72F3D8DD7ull;

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

} // namespace qgb
