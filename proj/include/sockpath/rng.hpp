#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace sockpath {

/// SplitMix64; used for seeding and for deriving per-trial streams.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t operator()() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// xoshiro256** (Blackman & Vigna). Satisfies UniformRandomBitGenerator.
class Xoshiro256 {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256(std::uint64_t seed);

    /// Independent stream for trial `index` of a run seeded with `seed`.
    static Xoshiro256 for_trial(std::uint64_t seed, std::uint64_t index);

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept;

    /// Uniform on [0, bound) without modulo bias. bound must be > 0.
    std::uint64_t bounded(std::uint64_t bound) noexcept;

private:
    std::array<std::uint64_t, 4> s_{};
};

}  // namespace sockpath
