#pragma once

#include <cstdint>

namespace gaussinterp {

/// Counter-based deterministic random numbers.
///
/// Every draw is a pure function of (seed, stream, index), so windows and data
/// vectors are bit-reproducible and independent of evaluation order:
///
///     key  = seed ^ (stream * 0xD1B54A32D192ED03) ^ (uint64(index) * 0x9E3779B97F4A7C15)
///     bits = splitmix64(key)
///
/// where splitmix64(z) adds 0x9E3779B97F4A7C15, then applies
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
/// z ^ (z >> 31). Signed indices are converted by two's complement.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
        : seed_(seed), stream_(stream) {}

    [[nodiscard]] std::uint64_t bits(std::int64_t index) const noexcept;

    /// Uniform on [0, 1) with 53 random bits: (bits >> 11) * 2^-53.
    [[nodiscard]] double uniform01(std::int64_t index) const noexcept;

    /// Uniform on [-half_width, half_width): half_width * (2 * uniform01 - 1).
    [[nodiscard]] double symmetric(std::int64_t index, double half_width) const noexcept;

    /// +1 or -1 from the top bit.
    [[nodiscard]] double rademacher(std::int64_t index) const noexcept;

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
};

[[nodiscard]] std::uint64_t splitmix64(std::uint64_t z) noexcept;

}  // namespace gaussinterp
