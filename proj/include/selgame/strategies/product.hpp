#pragma once

#include "selgame/game/strategy.hpp"
#include "selgame/topology/witness_family.hpp"

namespace selgame::strategies {

using game::P2CoverStrategy;
using topology::SpacePtr;
using topology::WitnessFamily;

// Factor strategies play on the first factor X and on the remaining factors
// Y of a product. Covers of the product are read through rectangle_refine and
// answered with the index of the original element.
//
// Full-information strategies keep per-round records as a replay cache; a
// window whose round differs from the cache length triggers a replay of the
// shown history. Audit records carry n, (j, k), the enumerated sequence and
// the chosen compact(s).

// Single selections; rounds are indexed by the pairing built over the
// ranges of the enumerated finite sequences.
P2CoverStrategy product_k_rothberger(const P2CoverStrategy& sx, const P2CoverStrategy& sy);

// Finite selections; rounds are indexed by the pairing built over the
// first halves of the enumerated split pairs.
P2CoverStrategy product_k_menger(const P2CoverStrategy& sx, const P2CoverStrategy& sy);

// Witness K_a × L_b at round cantor_pair(a, b), selected through rectangles.
P2CoverStrategy markov_product_k_rothberger(const WitnessFamily& wx, const WitnessFamily& wy);

// Markov finite selections; round n = cantor_pair(j, k) runs sy at round k
// and sx at round j.
P2CoverStrategy markov_product_k_menger(const P2CoverStrategy& sx, const P2CoverStrategy& sy);

// The space the second factor strategy plays on.
SpacePtr tail_space(const SpacePtr& prod);

}  // namespace selgame::strategies
