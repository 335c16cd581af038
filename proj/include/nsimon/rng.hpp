#pragma once

#include <cstdint>
#include <random>

namespace nsimon {

using Rng = std::mt19937_64;

/// Independent stream number `index` of a seed: the generator is seeded from
/// seed_seq{seed, index}, so (seed, index) pairs never share a state.
inline Rng make_stream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

/// A 64-bit child seed for sub-experiment `index`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    Rng r = make_stream(seed, index);
    return r();
}

}  // namespace nsimon
