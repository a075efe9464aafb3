#pragma once

#include <vector>

#include "selgame/game/engine.hpp"

namespace selgame::strategies {

using game::P1DualStrategy;
using game::P2DualStrategy;
using game::Transcript;
using topology::OpenDesc;
using topology::PointId;
using topology::SetDesc;

// The sum [0,1] ⊔ Fortissimo: summand 0 is the interval, summand 1 the
// Fortissimo model with ∞.

// Points an open set of the sum leaves out of the Fortissimo summand.
// Throws NotExpressible unless that part is the whole summand or a
// named complement.
std::vector<PointId> named_complement(const OpenDesc& u);

// K_0 = [0,1] ⊔ {∞}; K_n adds a_j[k] for j, k < n where they exist.
SetDesc chq_k(const std::vector<std::vector<PointId>>& a, std::size_t n);

// P1 in the compact-open game: K_n from the complements P2 has named.
P1DualStrategy chq_p1_compact_open();

// P2 in the compact-open game naming up to `per_round` seeded points
// below `pool` outside K_n.
P2DualStrategy chq_naive_p2(std::size_t per_round = 3, std::size_t pool = 40);

// P2 in the finite-open game: the whole Fortissimo summand plus intervals of
// radius 1/(2^(n+4) m) around the m interval points of F_n.
P2DualStrategy chq_p2_finite_open();

// P1 in the finite-open game naming `per_round` enumerated points per round.
P1DualStrategy chq_point_enumerator(const topology::SpacePtr& space, std::size_t per_round = 4);

struct MeasureLedger {
  // Summed length of the interval part of each answer, clipped to [0,1].
  std::vector<Rational> per_round;
  Rational total;
  bool per_round_ok = true;
  bool total_ok = true;
};

// Checks per-round length < 1/2^(n+2) and total < 1/2 in exact arithmetic.
MeasureLedger chq_measure_ledger(const Transcript& t);

}  // namespace selgame::strategies
