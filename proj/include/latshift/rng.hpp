#pragma once

// Counter-based pseudo-random stream: a splitmix64-style finalizer applied
// to (seed, counter). Stateless, so any index of the stream is addressable
// directly and shard decomposition cannot change the sample set.

#include "latshift/counting.hpp"

#include <cstdint>

namespace latshift {

inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Stream of dyadic shifts: sample index and resampling attempt address two
// 64-bit lanes each.
inline DyadicPoint shift_at(std::uint64_t seed, std::uint64_t index, std::uint32_t attempt) {
    const std::uint64_t base = index * 256 + attempt * 2;
    return DyadicPoint{mix64(seed, base), mix64(seed, base + 1)};
}

// Bounded uniform draw for corpus generation; the slight modulo bias is
// irrelevant for test-corpus sampling and keeps the stream portable.
inline std::uint64_t bounded(std::uint64_t seed, std::uint64_t counter, std::uint64_t n) {
    return mix64(seed, counter) % n;
}

} // namespace latshift
