#pragma once

#include <functional>

#include "selgame/game/engine.hpp"

namespace selgame::strategies {

using game::P1CoverStrategy;
using game::P2CoverStrategy;
using game::Transcript;
using topology::SpacePtr;
using topology::Word;

struct BaireAdversary {
  // Plays the cover of all cylinders over nonempty words every round.
  P1CoverStrategy source;
  std::size_t bound = 0;
  // A word, as long as the play and every selected cylinder, whose point
  // lies in no selected cylinder. Throws Config when a round selects more
  // than `bound` cylinders.
  std::function<Word(const Transcript&)> escape;
};

BaireAdversary baire_adversary(const SpacePtr& baire, std::size_t bound);

// f(k) is the least digit differing from t(k) for every selected t longer
// than k that agrees with f below k.
Word escape_word(const std::vector<Word>& selected, std::size_t min_length);

// Markov finite selections of at most `bound` seeded indices below `pool`.
P2CoverStrategy random_bounded_selector(std::size_t bound, std::size_t pool = 256);

}  // namespace selgame::strategies
