#pragma once

#include <functional>
#include <string>

#include <json.hpp>

#include "selgame/game/engine.hpp"

namespace selgame::game {

nlohmann::ordered_json spec_to_json(const GameSpec& spec);
nlohmann::ordered_json report_to_json(const Report& r);

// JSON Lines: {"spec"}, one record per round, then {"report"}.
std::string to_jsonl(const Transcript& t);

using SpaceResolver = std::function<SpacePtr(const std::string&)>;
Transcript parse_jsonl(const std::string& text, const SpaceResolver& resolve);

}  // namespace selgame::game
