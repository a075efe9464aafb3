#pragma once

#include "selgame/game/adversary.hpp"
#include "selgame/game/engine.hpp"
#include "selgame/topology/registry.hpp"

namespace fixtures {

inline const selgame::topology::SpaceRegistry& registry() {
  static const auto reg = selgame::topology::SpaceRegistry::load(SELGAME_SOURCE_DIR "/data/registry.json");
  return reg;
}

inline selgame::topology::SpacePtr space(const std::string& id) { return registry().get(id); }

inline selgame::game::GameSpec k_game(const selgame::topology::SpacePtr& s, std::size_t horizon, std::uint64_t seed,
                                      selgame::game::SelectionMode sel = selgame::game::SelectionMode::Single) {
  selgame::game::GameSpec g;
  g.selection = sel;
  g.p1_class = selgame::topology::CoverClass::K;
  g.target = selgame::topology::CoverClass::K;
  g.space = s;
  g.horizon = horizon;
  g.seed = seed;
  return g;
}

}  // namespace fixtures
