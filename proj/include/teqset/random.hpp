#pragma once

#include <cstdint>

#include "teqset/tournament.hpp"

namespace teqset {

/// SplitMix64 output function.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based draw: the `counter`-th output of a SplitMix64 stream keyed by
/// `key`. Depends on nothing but its two arguments.
constexpr std::uint64_t counter_draw(std::uint64_t key, std::uint64_t counter) {
    return splitmix64_mix(key + (counter + 1) * 0x9e3779b97f4a7c15ULL);
}

/// Seed of child stream `index` of `seed`. Used to give each search trial an
/// independent stream.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64_mix(counter_draw(seed, index) ^ 0x6a09e667f3bcc909ULL);
}

/// Uniformly random tournament. Pair (i, j), i < j, is oriented i > j iff the
/// top bit of counter_draw(seed, pair_index(i, j)) is set.
Tournament random_tournament(int order, std::uint64_t seed);

}  // namespace teqset
