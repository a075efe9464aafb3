#pragma once

#include <optional>
#include <string>
#include <vector>

#include "selgame/game/strategy.hpp"
#include "selgame/topology/space.hpp"
#include "selgame/topology/witness_family.hpp"

namespace selgame::witnesses {

using topology::Cover;
using topology::OpenDesc;
using topology::SetDesc;
using topology::Space;
using topology::WitnessFamily;
using topology::WitnessKind;

// Cof: B ⊆ A_n. CofHat: B ⊆ sat(A_n).
enum class CofMode { Cof, CofHat };

const char* cof_mode_name(CofMode m);

struct CofinalityClaim {
  CofMode mode = CofMode::Cof;
  std::vector<SetDesc> battery;
  // Least n <= bound serving each battery member.
  std::vector<std::size_t> witness;
};

struct CofinalityResult {
  std::optional<CofinalityClaim> claim;
  std::optional<SetDesc> counterexample;

  bool ok() const { return claim.has_value(); }
};

// Throws Unsupported when CofHat needs a saturation the model lacks.
CofinalityResult check_cofinality(const Space& s, const WitnessFamily& w, const std::vector<SetDesc>& battery,
                                  CofMode mode, std::size_t bound);

struct Validation {
  bool ok = true;
  std::string detail;
};

// Member shape plus cofinality against the battery the kind is about.
Validation validate_family(const Space& s, const WitnessFamily& w);

// One step along Hemicompact -> WeaklyRelativelyHemicompact,
// RelativelyHemicompact -> WeaklyRelativelyHemicompact,
// WeaklyRelativelyHemicompact -> SigmaRelativelyCompact,
// TopologicallyCountable -> NearlyHemicompact (prefix sets).
// The output is validated; failures throw ConstraintViolation.
WitnessFamily implication_chain(const Space& s, const WitnessFamily& w);

// RelativelyHemicompact <-> Hemicompact by closing members in a regular model.
WitnessFamily regular_collapse(const Space& s, const WitnessFamily& w);

struct BridgeResult {
  OpenDesc a;
  // Per probe, the probe elements whose union holds a.
  std::vector<std::vector<std::size_t>> subcovers;
};

// ∩ over probes of the union of sigma's round-n selection from the probe's
// finite-union closure. Probes stand in for all open covers.
BridgeResult markov_menger_relcover_bridge(const game::P2CoverStrategy& sigma, const std::vector<Cover>& probes,
                                           std::size_t n);

}  // namespace selgame::witnesses
