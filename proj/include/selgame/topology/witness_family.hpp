#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "selgame/topology/descriptors.hpp"

namespace selgame::topology {

enum class WitnessKind {
  TopologicallyCountable,
  SigmaRelativelyCompact,
  Hemicompact,
  NearlyHemicompact,
  RelativelyHemicompact,
  WeaklyRelativelyHemicompact,
  // Finite sets F_n whose saturations are cofinal in the finite sets.
  FiniteSetCofinal,
};

const char* witness_kind_name(WitnessKind k);
WitnessKind parse_witness_kind(const std::string& name);

// Indexed family {A_n}. Points are stored as singleton sets. Queries past the
// stored prefix return the last member, which is sound for nested families.
struct WitnessFamily {
  WitnessKind kind = WitnessKind::Hemicompact;
  std::vector<SetDesc> members;
  // Generator name and size when the family came from a named pattern.
  std::optional<std::string> pattern;
  std::size_t pattern_count = 0;

  const SetDesc& at(std::size_t n) const;
  std::size_t size() const { return members.size(); }
};

// Named generators: "balls" [-n,n], "open_balls" (-n,n), "initial_segments"
// {0..n}, "naturals" {n}, "integers" {0,1,-1,2,-2,...}, "words" {s_n}.
WitnessFamily witness_from_pattern(WitnessKind kind, const std::string& pattern, std::size_t count);

}  // namespace selgame::topology
