#pragma once

#include "selgame/topology/space.hpp"
#include "selgame/topology/witness_family.hpp"

namespace selgame::strategies {

using topology::Space;
using topology::WitnessFamily;

// Points x_n -> F_n = {x_0, ..., x_n} (FiniteSetCofinal), and back by
// enumerating the union of the F_n. Both directions re-validate on the
// space's batteries and throw ConstraintViolation on failure.
WitnessFamily points_to_finite_sets(const Space& s, const WitnessFamily& w);
WitnessFamily finite_sets_to_points(const Space& s, const WitnessFamily& w);

// Member cantor_pair(a, b) is A_a × B_b (or the pair point for point
// families). Kinds must match; the result is validated on the product.
WitnessFamily product_witnesses(const Space& prod, const WitnessFamily& wx, const WitnessFamily& wy,
                                std::size_t count);

}  // namespace selgame::strategies
