#pragma once

#include <functional>
#include <vector>

#include "selgame/game/strategy.hpp"
#include "selgame/topology/witness_family.hpp"

namespace selgame::strategies {

using game::Cover;
using game::P2CoverStrategy;
using topology::CoverClass;
using topology::OpenDesc;
using topology::PointId;
using topology::SetDesc;
using topology::SpacePtr;
using topology::WitnessFamily;

// Round n: the element the cover's selector picks for A_n.
P2CoverStrategy markov_from_cofinality(const WitnessFamily& w, CoverClass cls);

// Cover in which element 0 is `first` and element i + 1 is c's element i.
// Challenges inside `first` select 0.
Cover prepend(const Cover& c, const OpenDesc& first);

using CoverBuilder = std::function<Cover(const PointId& excluded, std::size_t round)>;

// P1 move list under which the Markov strategy sigma omits xs[n] in round n.
// Throws Unsupported when a built cover does not exclude its point.
std::vector<Cover> markov_falsifier(const P2CoverStrategy& sigma, const SetDesc& bad, const std::vector<PointId>& xs,
                                    const CoverBuilder& builder, std::size_t horizon, std::uint64_t seed = 0);

// A choice function known on a finite family of covers.
struct ChoiceTable {
  std::vector<Cover> family;
  std::function<OpenDesc(const Cover&)> phi;
};

// Candidate neighbourhoods of a challenge, tried in order.
using NeighbourhoodSource = std::function<std::vector<OpenDesc>(const SetDesc&)>;

struct DefeatingCover {
  Cover cover;
  // phi over the table; disjoint from the cover's elements.
  std::vector<OpenDesc> range;
  // Element chosen for each battery challenge.
  std::vector<OpenDesc> chosen;
};

// {U_A : A in battery} with every U_A outside the range of phi. Throws
// MissingWitness when some challenge has no such neighbourhood.
DefeatingCover galvin_defeating_cover(const SpacePtr& space, CoverClass cls, const ChoiceTable& table,
                                      const std::vector<SetDesc>& battery, const NeighbourhoodSource& witnesses);

}  // namespace selgame::strategies
