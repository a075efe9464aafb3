#include "selgame/topology/registry.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "selgame/error.hpp"
#include "selgame/topology/serialize.hpp"

#ifndef SELGAME_DEFAULT_REGISTRY
#define SELGAME_DEFAULT_REGISTRY "data/registry.json"
#endif

namespace selgame::topology {

using nlohmann::json;

namespace {

struct Resolver {
  std::map<std::string, const json*> raw;
  std::map<std::string, SpacePtr> done;
  std::set<std::string> active;

  SpacePtr resolve(const std::string& id) {
    if (auto it = done.find(id); it != done.end()) return it->second;
    auto it = raw.find(id);
    if (it == raw.end()) throw Error(Errc::Config, "unknown space reference '" + id + "'");
    if (!active.insert(id).second) throw Error(Errc::Config, "cyclic space reference at '" + id + "'");
    const json& e = *it->second;
    SpacePtr s = build(id, e);
    active.erase(id);
    done[id] = s;
    return s;
  }

  SpacePtr build(const std::string& id, const json& e) {
    try {
      std::string kind = e.at("kind").get<std::string>();
      const json params = e.value("params", json::object());
      SpacePtr base;
      if (kind == "Power") {
        base = make_power(id, resolve(params.at("base").get<std::string>()), params.at("arity").get<std::size_t>());
      } else if (kind == "Product") {
        std::vector<SpacePtr> fs;
        for (const auto& f : params.at("factors")) fs.push_back(resolve(f.get<std::string>()));
        base = make_product(id, std::move(fs));
      } else if (kind == "Sum") {
        std::vector<SpacePtr> ss;
        for (const auto& f : params.at("summands")) ss.push_back(resolve(f.get<std::string>()));
        base = make_sum(id, std::move(ss));
      } else {
        base = make_space(id, parse_space_kind(kind));
      }
      auto s = std::make_shared<Space>(*base);
      if (e.contains("flags")) {
        const json& f = e.at("flags");
        s->flags.t1 = f.at("t1").get<bool>();
        s->flags.regular = f.at("regular").get<bool>();
        s->flags.second_countable = f.at("second_countable").get<bool>();
        s->flags.fidelity_caveat = f.at("fidelity_caveat").get<bool>();
      }
      const json b = e.value("batteries", json::object());
      for (const auto& p : b.value("points", json::array())) s->batteries.points.push_back(point_from_json(p));
      for (const auto& x : b.value("finite_sets", json::array())) s->batteries.finite_sets.push_back(set_from_json(x));
      for (const auto& x : b.value("compacts", json::array())) s->batteries.compacts.push_back(set_from_json(x));
      for (const auto& x : b.value("relcompacts", json::array())) s->batteries.relcompacts.push_back(set_from_json(x));
      const json ws = e.value("witnesses", json::object());
      for (const auto& [name, w] : ws.items()) {
        s->witnesses.emplace(name, witness_from_json(w));
      }
      for (const auto& p : s->batteries.points) check_point(*s, p);
      for (const auto& x : s->batteries.finite_sets) check_set(*s, x);
      for (const auto& x : s->batteries.compacts) check_set(*s, x);
      for (const auto& x : s->batteries.relcompacts) check_set(*s, x);
      return s;
    } catch (const json::exception& ex) {
      throw Error(Errc::Config, "space '" + id + "': " + ex.what());
    } catch (const Error& ex) {
      if (ex.code() == Errc::Config) throw;
      throw Error(Errc::Config, "space '" + id + "': " + ex.what());
    }
  }
};

}  // namespace

SpaceRegistry SpaceRegistry::parse(const json& doc) {
  if (!doc.is_object()) throw Error(Errc::Config, "registry root must be an object");
  if (doc.value("version", 0) != kVersion) {
    throw Error(Errc::Config, "unsupported registry version " + doc.value("version", json(nullptr)).dump());
  }
  Resolver r;
  const json& spaces = doc.contains("spaces") ? doc.at("spaces") : json::array();
  if (!spaces.is_array()) throw Error(Errc::Config, "'spaces' must be an array");
  for (const auto& e : spaces) {
    if (!e.is_object() || !e.contains("id")) throw Error(Errc::Config, "space entry without id: " + e.dump());
    std::string id = e.at("id").get<std::string>();
    if (!r.raw.emplace(id, &e).second) throw Error(Errc::Config, "duplicate space id '" + id + "'");
  }
  SpaceRegistry out;
  for (const auto& [id, _] : r.raw) out.spaces_[id] = r.resolve(id);
  return out;
}

SpaceRegistry SpaceRegistry::parse_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw Error(Errc::Config, std::string("registry parse error at byte ") + std::to_string(ex.byte) + ": " + ex.what());
  }
  return parse(doc);
}

SpaceRegistry SpaceRegistry::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Config, "cannot read registry '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

std::string SpaceRegistry::default_path() {
  if (const char* env = std::getenv("SELGAME_REGISTRY"); env && *env) return env;
  return SELGAME_DEFAULT_REGISTRY;
}

json space_to_json(const Space& s) {
  json e{{"id", s.id}};
  json params = json::object();
  if (s.power) {
    e["kind"] = "Power";
    params["base"] = s.parts.front()->id;
    params["arity"] = s.parts.size();
  } else {
    e["kind"] = space_kind_name(s.kind);
    if (s.kind == SpaceKind::Product || s.kind == SpaceKind::Sum) {
      json ids = json::array();
      for (const auto& p : s.parts) ids.push_back(p->id);
      params[s.kind == SpaceKind::Product ? "factors" : "summands"] = ids;
    }
  }
  e["params"] = params;
  e["flags"] = json{{"fidelity_caveat", s.flags.fidelity_caveat},
                    {"regular", s.flags.regular},
                    {"second_countable", s.flags.second_countable},
                    {"t1", s.flags.t1}};
  json b = json::object();
  auto arr = [](const auto& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(to_json(x));
    return a;
  };
  b["points"] = arr(s.batteries.points);
  b["finite_sets"] = arr(s.batteries.finite_sets);
  b["compacts"] = arr(s.batteries.compacts);
  b["relcompacts"] = arr(s.batteries.relcompacts);
  e["batteries"] = b;
  json w = json::object();
  for (const auto& [name, fam] : s.witnesses) w[name] = to_json(fam);
  e["witnesses"] = w;
  return e;
}

json SpaceRegistry::to_json() const {
  json spaces = json::array();
  for (const auto& [id, s] : spaces_) spaces.push_back(space_to_json(*s));
  return json{{"spaces", spaces}, {"version", kVersion}};
}

std::string SpaceRegistry::serialize() const { return to_json().dump(2) + "\n"; }

SpacePtr SpaceRegistry::get(const std::string& id) const {
  auto it = spaces_.find(id);
  if (it == spaces_.end()) throw Error(Errc::Config, "space '" + id + "' not in registry");
  return it->second;
}

std::vector<std::string> SpaceRegistry::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, _] : spaces_) out.push_back(id);
  return out;
}

void SpaceRegistry::add(SpacePtr space) { spaces_[space->id] = std::move(space); }

}  // namespace selgame::topology
