#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "selgame/game/engine.hpp"
#include "selgame/topology/registry.hpp"

namespace selgame::cli {

constexpr std::size_t kMaxHorizon = 4096;

// A game plus strategy constructor refs; see docs/formats.md.
struct Scenario {
  std::string name;
  game::GameSpec spec;
  nlohmann::json p1;
  nlohmann::json p2;
};

// Throws Errc::Config on unresolved refs or a horizon above kMaxHorizon.
// Strategy refs are checked by building them once.
Scenario parse_scenario(const nlohmann::json& doc, const topology::SpaceRegistry& reg);
Scenario load_scenario(const std::string& path, const topology::SpaceRegistry& reg);

enum class Human { None, P1, P2 };

struct Console {
  std::istream& in;
  std::ostream& out;
};

// Plays the scenario at `seed`; the human side reads moves from `io`.
// Interactive play is limited to cover games.
game::Transcript play_scenario(const Scenario& sc, const topology::SpaceRegistry& reg, std::uint64_t seed,
                               Human human = Human::None, Console* io = nullptr);

// Menu-driven strategies; they re-prompt until the move is legal and throw
// Errc::Config when input ends.
game::P2CoverStrategy console_p2(Console& io, game::SelectionMode mode);
game::P1CoverStrategy console_p1(Console& io, const topology::SpacePtr& space, topology::CoverClass cls);

}  // namespace selgame::cli
