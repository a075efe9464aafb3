#pragma once

#include "selgame/game/strategy.hpp"

namespace selgame::game {

// Nested covers with seeded perturbations; products get L-shaped elements.
// Sound for every challenge the space's batteries can pose.
Cover adversary_cover(const SpacePtr& space, CoverClass cls, std::uint64_t seed);

// Element i is the cylinder of the (i + 1)-th finite sequence, so every
// nonempty word appears; sets of words select the cylinder of their shared
// first digit.
Cover cylinder_cover(const SpacePtr& space, CoverClass cls);

// Permutes the stream within blocks and pads each block with decoys.
Cover mangle(const Cover& c, std::uint64_t seed, std::size_t block = 4, std::size_t decoys = 2);

// Predetermined P1 playing mangled adversary covers.
P1CoverStrategy adversary_strategy(const SpacePtr& space, CoverClass cls);

}  // namespace selgame::game
