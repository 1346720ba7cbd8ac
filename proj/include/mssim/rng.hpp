// Seeded random stream for reproducible simulation runs.
//
// Algorithm: xoshiro256++ (Blackman & Vigna), state expanded from the
// 64-bit seed with splitmix64. Both have published reference
// implementations and produce the same draw sequence on every platform;
// the uniform conversions below use only shifts and IEEE-754 multiplies,
// so a (seed, draw index) pair identifies one exact value everywhere.

#pragma once

#include <array>
#include <cstdint>

namespace mssim {

class RngStream {
public:
    RngStream() : RngStream(0) {}

    explicit RngStream(std::uint64_t seed) {
        // splitmix64 expansion; avoids the all-zero xoshiro state for any seed
        std::uint64_t x = seed;
        for (auto& word : state_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 significant bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n); n must be > 0.
    /// Multiply-shift reduction (bias < n / 2^64, irrelevant at model scale).
    std::uint64_t uniform_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// Uniform heading in degrees, [0, 360).
    double heading_deg() { return 360.0 * uniform01(); }

    const std::array<std::uint64_t, 4>& state() const { return state_; }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

} // namespace mssim
