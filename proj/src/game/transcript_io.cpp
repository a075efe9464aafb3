#include "selgame/game/transcript_io.hpp"

#include <map>
#include <sstream>

#include "selgame/topology/serialize.hpp"

namespace selgame::game {

using namespace topology;
using ojson = nlohmann::ordered_json;

namespace {

ojson ordered(const nlohmann::json& j) { return ojson::parse(j.dump()); }

}  // namespace

ojson spec_to_json(const GameSpec& spec) {
  ojson j;
  j["selection"] = spec.selection == SelectionMode::Single ? "single" : "finite";
  if (auto d = std::get_if<DualKind>(&spec.p1_class)) {
    j["p1_class"] = dual_kind_name(*d);
  } else {
    j["p1_class"] = cover_class_name(std::get<CoverClass>(spec.p1_class));
  }
  j["target"] = spec.target ? cover_class_name(*spec.target) : "avoid";
  j["space"] = spec.space ? spec.space->id : "";
  j["horizon"] = spec.horizon;
  j["seed"] = spec.seed;
  j["audit"] = spec.audit;
  if (spec.battery) {
    ojson b = ojson::array();
    for (const auto& k : *spec.battery) b.push_back(ordered(to_json(k)));
    j["battery"] = b;
  }
  return j;
}

ojson report_to_json(const Report& r) {
  ojson j;
  j["p2_wins"] = r.p2_wins;
  j["battery_relative"] = true;
  j["aborted"] = r.aborted;
  if (r.aborted) j["abort_reason"] = r.abort_reason;
  ojson vs = ojson::array();
  for (const auto& v : r.verdicts) {
    ojson e;
    e["challenge"] = ordered(to_json(v.challenge));
    e["round"] = v.round ? ojson(*v.round) : ojson(nullptr);
    e["indices"] = v.indices;
    vs.push_back(e);
  }
  j["verdicts"] = vs;
  j["uncovered"] = r.uncovered ? ordered(to_json(*r.uncovered)) : ojson(nullptr);
  j["exhibited"] = r.exhibited ? ordered(to_json(*r.exhibited)) : ojson(nullptr);
  return j;
}

std::string to_jsonl(const Transcript& t) {
  std::ostringstream out;
  out << ojson{{"spec", spec_to_json(t.spec)}}.dump() << "\n";
  for (const auto& r : t.rounds) {
    ojson j;
    j["n"] = r.n;
    j["p1"] = r.p1;
    if (t.spec.dual()) {
      j["p2"] = ordered(to_json(r.selected.front()));
    } else {
      j["p2"] = r.indices;
    }
    if (!r.audit.is_null()) j["audit"] = ordered(r.audit);
    out << j.dump() << "\n";
  }
  out << ojson{{"report", report_to_json(t.report)}}.dump() << "\n";
  return out.str();
}

namespace {

GameSpec spec_from_json(const nlohmann::json& j, const SpaceResolver& resolve) {
  GameSpec s;
  s.selection = j.at("selection").get<std::string>() == "single" ? SelectionMode::Single : SelectionMode::Finite;
  std::string p1 = j.at("p1_class").get<std::string>();
  if (p1 == "compact") {
    s.p1_class = DualKind::CompactMove;
  } else if (p1 == "finite-set") {
    s.p1_class = DualKind::FiniteSetMove;
  } else {
    s.p1_class = parse_cover_class(p1);
  }
  std::string target = j.at("target").get<std::string>();
  if (target == "avoid") {
    s.target.reset();
  } else {
    s.target = parse_cover_class(target);
  }
  s.space = resolve(j.at("space").get<std::string>());
  s.horizon = j.at("horizon").get<std::size_t>();
  s.seed = j.at("seed").get<std::uint64_t>();
  s.audit = j.value("audit", false);
  if (j.contains("battery")) {
    std::vector<SetDesc> b;
    for (const auto& k : j.at("battery")) b.push_back(set_from_json(k));
    s.battery = b;
  }
  return s;
}

}  // namespace

Transcript parse_jsonl(const std::string& text, const SpaceResolver& resolve) {
  Transcript t;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool have_spec = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      if (j.contains("spec")) {
        t.spec = spec_from_json(j.at("spec"), resolve);
        have_spec = true;
      } else if (j.contains("report")) {
        const auto& r = j.at("report");
        t.report.p2_wins = r.at("p2_wins").get<bool>();
        t.report.aborted = r.at("aborted").get<bool>();
        t.report.abort_reason = r.value("abort_reason", "");
      } else {
        if (!have_spec) throw Error(Errc::Config, "round before spec");
        RoundRecord rec;
        rec.n = j.at("n").get<std::size_t>();
        rec.p1 = nlohmann::ordered_json::parse(j.at("p1").dump());
        if (t.spec.dual()) {
          rec.selected = {open_from_json(j.at("p2"))};
        } else {
          rec.indices = j.at("p2").get<std::vector<std::size_t>>();
          std::map<std::size_t, OpenDesc> touched;
          for (const auto& e : j.at("p1").at("touched")) touched.emplace(e.at(0).get<std::size_t>(), open_from_json(e.at(1)));
          for (std::size_t i : rec.indices) rec.selected.push_back(touched.at(i));
        }
        if (j.contains("audit")) rec.audit = j.at("audit");
        t.rounds.push_back(std::move(rec));
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::Config, "transcript line " + std::to_string(lineno) + ": " + e.what());
    } catch (const std::out_of_range&) {
      throw Error(Errc::Config, "transcript line " + std::to_string(lineno) + ": unknown element index");
    }
  }
  if (!have_spec) throw Error(Errc::Config, "transcript has no spec record");
  return t;
}

}  // namespace selgame::game
