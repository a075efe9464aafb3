#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "selgame/game/strategy.hpp"
#include "selgame/topology/witness_family.hpp"

namespace selgame::strategies {

using game::Cover;
using game::P2CoverStrategy;
using topology::OpenDesc;
using topology::PointId;
using topology::SetDesc;
using topology::SpacePtr;
using topology::WitnessFamily;

// Witness data for unfolding an ω-strategy. Both callbacks see the ω-covers
// recorded so far.
struct GalvinExtractor {
  // Finite core F with every neighbourhood of F an achievable response.
  std::function<std::vector<PointId>(const std::vector<Cover>& prefix)> core;
  // An ω-cover under which the ω-strategy answers exactly `target`.
  std::function<std::optional<Cover>(const std::vector<Cover>& prefix, const OpenDesc& target)> realize;
};

struct UnfoldState {
  std::vector<std::vector<PointId>> f;
  // m[b] is the last round of block b; -1 before any round.
  std::vector<long long> m;
  std::vector<Cover> w;
  std::vector<PointId> x;
};

// Open-cover Rothberger strategy from an ω-Rothberger strategy sigma0. Round t
// picks an element containing x_t; when a block ends its union is realized
// as sigma0's answer to the next recorded ω-cover. Audit records carry the
// block, M and x_t.
P2CoverStrategy unfold_omega_to_open_rothberger(const P2CoverStrategy& sigma0, const GalvinExtractor& g);

// The block bookkeeping a transcript's audit implies; throws
// ConstraintViolation when M_{b+1} != M_b + #F_{b+1}.
UnfoldState unfold_state_from_audit(const std::vector<nlohmann::json>& audits);

// Strategy for round n on the (m + 1)-th power, m >= 0; m = 0 plays on X.
using PowerFamily = std::function<P2CoverStrategy(std::size_t m, const SpacePtr& power)>;

// ω-Rothberger strategy: round n = β(m, k) lifts the cover to {U^(m+1)} and
// plays sigma_m on the row history.
P2CoverStrategy powers_to_omega_rothberger(const PowerFamily& sigma, std::size_t max_power = 64);

// {U^(m+1) : U in c} as a cover of the power; c itself when m = 0.
Cover lift_to_power(const Cover& c, std::size_t m, const SpacePtr& power);

// Space of (m + 1)-tuples, cached per base space.
SpacePtr power_of(const SpacePtr& base, std::size_t m);

// A_{j,l} for the (j + 1)-th power.
using PowerWitnesses = std::function<SetDesc(std::size_t j, std::size_t l)>;

// Markov finite ω-strategy: round n joins, for j <= n, a finite subfamily
// whose (j + 1)-th powers cover A_{j,0} ∪ ... ∪ A_{j,n}. Rows stop at
// max_power, so only finite sets of at most max_power points are served.
P2CoverStrategy markov_omega_menger_from_src(const PowerWitnesses& w, std::size_t max_power = 3);

}  // namespace selgame::strategies
