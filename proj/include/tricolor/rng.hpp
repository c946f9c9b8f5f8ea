#pragma once

#include <cstdint>
#include <limits>

namespace tricolor {

/// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-based generator: draw k of stream t under seed s is
///   mix64(key(s, t) + k * 0x9E3779B97F4A7C15),  key(s, t) = mix64(s ^ mix64(t)).
/// Streams are independent and any draw can be replayed from (seed, stream, counter).
/// Satisfies UniformRandomBitGenerator.
class CounterRng {
public:
    using result_type = std::uint64_t;

    CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter = 0)
        : key_(mix64(seed ^ mix64(stream))), counter_(counter) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return mix64(key_ + (counter_++) * 0x9E3779B97F4A7C15ULL); }

    /// Uniform integer in [0, n) by Lemire's multiply-shift with rejection; n > 0.
    std::uint32_t below(std::uint32_t n);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_;
};

}  // namespace tricolor
