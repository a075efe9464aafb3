#pragma once

#include <json.hpp>

#include "selgame/topology/descriptors.hpp"
#include "selgame/topology/witness_family.hpp"

namespace selgame::topology {

// Tagged descriptor trees; see docs/formats.md.
nlohmann::json to_json(const PointId& p);
nlohmann::json to_json(const OpenDesc& u);
nlohmann::json to_json(const SetDesc& s);
nlohmann::json to_json(const WitnessFamily& w);

PointId point_from_json(const nlohmann::json& j);
OpenDesc open_from_json(const nlohmann::json& j);
SetDesc set_from_json(const nlohmann::json& j);
WitnessFamily witness_from_json(const nlohmann::json& j);

// Compact canonical text, used as an interning key.
std::string canonical_key(const SetDesc& s);
std::string canonical_key(const OpenDesc& u);

}  // namespace selgame::topology
