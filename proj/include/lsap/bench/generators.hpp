#pragma once

#include <cstdint>
#include <vector>

#include "lsap/core.hpp"

namespace lsap::bench {

// I.i.d. uniform entries in [0, 2^width); deterministic per seed.
WeightMatrix gen_random(std::size_t n, int width, std::uint64_t seed);

// Stand-in for slot-allocation data: every row prefers one slot and its
// costs grow linearly with the distance from it, plus uniform noise in
// [0, noise]. A negative noise picks half the distance step.
WeightMatrix gen_structured(std::size_t n, std::uint64_t seed, int width = kDefaultBitLength,
                            std::int64_t noise = -1);

// The preferred slot of every row, as drawn by gen_structured for this seed.
std::vector<std::size_t> structured_preferences(std::size_t n, std::uint64_t seed);

// Distance step used by gen_structured.
std::int64_t structured_step(std::size_t n, int width);

}  // namespace lsap::bench
