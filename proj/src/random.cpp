#include "gaussinterp/random.hpp"

namespace gaussinterp {

std::uint64_t splitmix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t CounterRng::bits(std::int64_t index) const noexcept {
    const auto idx = static_cast<std::uint64_t>(index);
    const std::uint64_t key =
        seed_ ^ (stream_ * 0xD1B54A32D192ED03ULL) ^ (idx * 0x9E3779B97F4A7C15ULL);
    return splitmix64(key);
}

double CounterRng::uniform01(std::int64_t index) const noexcept {
    return static_cast<double>(bits(index) >> 11) * 0x1.0p-53;
}

double CounterRng::symmetric(std::int64_t index, double half_width) const noexcept {
    return half_width * (2.0 * uniform01(index) - 1.0);
}

double CounterRng::rademacher(std::int64_t index) const noexcept {
    return (bits(index) >> 63) != 0 ? 1.0 : -1.0;
}

}  // namespace gaussinterp
