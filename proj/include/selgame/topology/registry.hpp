#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "selgame/topology/space.hpp"

namespace selgame::topology {

// Named spaces loaded from the registry JSON document (docs/formats.md).
class SpaceRegistry {
 public:
  static constexpr int kVersion = 1;

  // Malformed documents throw Error(Config) with the offending location.
  static SpaceRegistry parse(const nlohmann::json& doc);
  static SpaceRegistry parse_text(const std::string& text);
  static SpaceRegistry load(const std::string& path);
  // SELGAME_REGISTRY if set, else the shipped data/registry.json.
  static std::string default_path();

  nlohmann::json to_json() const;
  // Two-space indented, keys sorted, trailing newline.
  std::string serialize() const;

  SpacePtr get(const std::string& id) const;
  bool has(const std::string& id) const { return spaces_.count(id) != 0; }
  std::vector<std::string> ids() const;
  std::size_t size() const { return spaces_.size(); }

  void add(SpacePtr space);

 private:
  std::map<std::string, SpacePtr> spaces_;
};

nlohmann::json space_to_json(const Space& s);

}  // namespace selgame::topology
