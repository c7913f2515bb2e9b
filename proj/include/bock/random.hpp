#pragma once

#include <cstdint>
#include <random>

namespace bock {

/// Engine for instance `index` of a run seeded with `seed`. Instances are
/// independent of each other and of evaluation order.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + index + 0x632BE59BD9B4E019ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return std::mt19937_64(z ^ (z >> 31));
}

/// Uniform draw from [0, n). Plain modulo keeps results identical across
/// standard library implementations.
inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t n)
{
    return n == 0 ? 0 : rng() % n;
}

}  // namespace bock
