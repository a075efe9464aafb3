#include "selgame/game/engine.hpp"

#include "selgame/topology/cover_ops.hpp"
#include "selgame/topology/serialize.hpp"

namespace selgame::game {

using namespace topology;

const char* strength_name(Strength s) {
  switch (s) {
    case Strength::Constant: return "Constant";
    case Strength::Predetermined: return "Predetermined";
    case Strength::Markov: return "Markov";
    case Strength::Full: return "Full";
  }
  return "?";
}

Strength parse_strength(const std::string& name) {
  for (auto s : {Strength::Constant, Strength::Predetermined, Strength::Markov, Strength::Full}) {
    if (name == strength_name(s)) return s;
  }
  throw Error(Errc::Config, "unknown strategy strength '" + name + "'");
}

const char* dual_kind_name(DualKind k) { return k == DualKind::CompactMove ? "compact" : "finite-set"; }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

constexpr std::uint64_t kP2Salt = 0x5eed0f2a11ce5ULL;

std::string round_prefix(std::size_t n) { return "round " + std::to_string(n) + ": "; }

void attach_audit(RoundRecord& rec, nlohmann::json a1, nlohmann::json a2) {
  if (a1.is_null() && a2.is_null()) return;
  rec.audit = nlohmann::json::object();
  if (!a1.is_null()) rec.audit["p1"] = std::move(a1);
  if (!a2.is_null()) rec.audit["p2"] = std::move(a2);
}

std::vector<SetDesc> fitting_battery(const Space& s, CoverClass cls) {
  std::vector<SetDesc> out;
  for (auto& k : battery_for(s, cls)) {
    if (challenge_fits(s, cls, k)) out.push_back(std::move(k));
  }
  return out;
}

std::optional<std::string> unsound_at(const Space& s, const Cover& c, const std::vector<SetDesc>& battery) {
  for (const auto& k : battery) {
    auto i = c.select(k);
    if (!i) return "no element selected for " + to_string(k);
    auto e = c.element(*i);
    if (!e || !contains(s, k, *e)) return "element " + std::to_string(*i) + " does not contain " + to_string(k);
  }
  return std::nullopt;
}

void finish(Transcript& t, std::optional<std::string> abort) {
  t.report = judge(t);
  if (abort) {
    t.report.aborted = true;
    t.report.abort_reason = *abort;
  }
}

}  // namespace

Transcript run_game(const GameSpec& spec, const P1CoverStrategy& p1, const P2CoverStrategy& p2,
                    const RunOptions& opts) {
  if (spec.dual()) throw Error(Errc::Config, "run_game needs a cover game spec");
  if (!spec.space) throw Error(Errc::Config, "game spec has no space");
  if (p1.owner != Owner::P1 || p2.owner != Owner::P2) throw Error(Errc::Config, "strategy owners do not match");
  if (p2.selection != spec.selection) {
    throw Error(Errc::Config, "strategy " + p2.name + " has the wrong selection arity for this game");
  }
  const CoverClass p1_cls = std::get<CoverClass>(spec.p1_class);
  const std::vector<SetDesc> p1_battery = spec.check_p1 ? fitting_battery(*spec.space, p1_cls) : std::vector<SetDesc>{};
  const Space& space = *spec.space;

  Transcript t;
  t.spec = spec;
  auto d1 = p1.factory(spec.seed);
  auto d2 = p2.factory(splitmix64(spec.seed ^ kP2Salt));
  Window<Selected> w1;
  Window<Cover> w2;
  std::optional<std::string> abort;

  for (std::size_t n = 0; n < spec.horizon && !abort; ++n) {
    nlohmann::json a1, a2;
    nlohmann::json* pa1 = spec.audit ? &a1 : nullptr;
    nlohmann::json* pa2 = spec.audit ? &a2 : nullptr;

    w1.round = n;
    Window<Selected> shown1 = w1;
    if (opts.tamper_p1) opts.tamper_p1(shown1);
    Cover move;
    try {
      move = d1(narrow(shown1, p1.strength), pa1);
    } catch (const Error& e) {
      abort = round_prefix(n) + "P1 failed: " + e.what();
      break;
    }
    if (!move.valid() || move.space()->id != space.id) {
      abort = round_prefix(n) + "P1 cover is not over " + space.id;
      break;
    }
    if (spec.check_p1) {
      std::optional<std::string> bad;
      try {
        bad = unsound_at(space, move, p1_battery);
      } catch (const Error& e) {
        bad = e.what();
      }
      if (bad) {
        abort = round_prefix(n) + "illegal P1 move " + move.name() + ": " + *bad;
        break;
      }
    }

    w2.round = n;
    w2.history.push_back(move);
    Window<Cover> shown2 = w2;
    if (opts.tamper_p2) opts.tamper_p2(shown2);
    std::vector<std::size_t> picks;
    try {
      picks = d2(narrow(shown2, p2.strength), pa2);
    } catch (const Error& e) {
      abort = round_prefix(n) + "P2 failed: " + e.what();
      break;
    }
    if (spec.selection == SelectionMode::Single && picks.size() != 1) {
      abort = round_prefix(n) + "illegal P2 move: single selection returned " + std::to_string(picks.size()) +
              " indices";
      break;
    }
    RoundRecord rec;
    rec.n = n;
    rec.indices = picks;
    nlohmann::ordered_json touched = nlohmann::ordered_json::array();
    for (std::size_t i : picks) {
      auto e = move.element(i);
      if (!e) {
        abort = round_prefix(n) + "illegal P2 move: index " + std::to_string(i) + " is out of range";
        break;
      }
      rec.selected.push_back(*e);
      touched.push_back({i, nlohmann::ordered_json::parse(to_json(*e).dump())});
    }
    if (abort) break;
    rec.p1 = {{"cover", move.name()}, {"touched", touched}};
    attach_audit(rec, std::move(a1), std::move(a2));
    w1.history.push_back(Selected{rec.indices, rec.selected});
    t.rounds.push_back(std::move(rec));
  }
  finish(t, abort);
  return t;
}

P1CoverStrategy fixed_moves(std::vector<Cover> moves) {
  P1CoverStrategy s;
  s.name = "fixed-moves";
  s.owner = Owner::P1;
  s.strength = Strength::Predetermined;
  s.factory = [moves](std::uint64_t) {
    return [moves](const Window<Selected>& w, nlohmann::json*) -> Cover {
      if (w.round >= moves.size()) throw Error(Errc::Config, "move list shorter than the horizon");
      return moves[w.round];
    };
  };
  return s;
}

Transcript run_game(const GameSpec& spec, const std::vector<Cover>& p1_moves, const P2CoverStrategy& p2,
                    const RunOptions& opts) {
  if (p1_moves.size() < spec.horizon) throw Error(Errc::Config, "move list shorter than the horizon");
  return run_game(spec, fixed_moves(p1_moves), p2, opts);
}

Transcript run_dual_game(const GameSpec& spec, const P1DualStrategy& p1, const P2DualStrategy& p2) {
  if (!spec.dual()) throw Error(Errc::Config, "run_dual_game needs a dual game spec");
  if (!spec.space) throw Error(Errc::Config, "game spec has no space");
  if (p1.owner != Owner::P1 || p2.owner != Owner::P2) throw Error(Errc::Config, "strategy owners do not match");
  const DualKind kind = std::get<DualKind>(spec.p1_class);
  const Space& space = *spec.space;

  Transcript t;
  t.spec = spec;
  auto d1 = p1.factory(spec.seed);
  auto d2 = p2.factory(splitmix64(spec.seed ^ kP2Salt));
  Window<OpenDesc> w1;
  Window<SetDesc> w2;
  std::optional<std::string> abort;

  for (std::size_t n = 0; n < spec.horizon && !abort; ++n) {
    nlohmann::json a1, a2;
    nlohmann::json* pa1 = spec.audit ? &a1 : nullptr;
    nlohmann::json* pa2 = spec.audit ? &a2 : nullptr;
    w1.round = n;
    SetDesc k;
    try {
      k = d1(narrow(w1, p1.strength), pa1);
      check_set(space, k);
    } catch (const Error& e) {
      abort = round_prefix(n) + "P1 failed: " + e.what();
      break;
    }
    bool fits = kind == DualKind::CompactMove ? is_compact(space, k) : std::holds_alternative<sets::Points>(k.v);
    if (!fits) {
      abort = round_prefix(n) + "illegal P1 move: " + to_string(k) + " is not a " + dual_kind_name(kind) + " move";
      break;
    }
    w2.round = n;
    w2.history.push_back(k);
    OpenDesc u;
    try {
      u = d2(narrow(w2, p2.strength), pa2);
      check_open(space, u);
    } catch (const Error& e) {
      abort = round_prefix(n) + "P2 failed: " + e.what();
      break;
    }
    if (!contains(space, k, u)) {
      abort = round_prefix(n) + "illegal P2 move: " + to_string(u) + " does not contain " + to_string(k);
      break;
    }
    RoundRecord rec;
    rec.n = n;
    rec.p1 = nlohmann::ordered_json::parse(to_json(k).dump());
    rec.selected = {u};
    attach_audit(rec, std::move(a1), std::move(a2));
    w1.history.push_back(u);
    t.rounds.push_back(std::move(rec));
  }
  finish(t, abort);
  return t;
}

std::vector<SetDesc> judge_battery(const GameSpec& spec) {
  if (spec.battery) return *spec.battery;
  const Space& s = *spec.space;
  if (spec.target) return battery_for(s, *spec.target);
  if (spec.dual() && std::get<DualKind>(spec.p1_class) == DualKind::CompactMove) return s.batteries.compacts;
  std::vector<SetDesc> out;
  for (const auto& p : s.batteries.points) out.push_back(point_set(p));
  return out;
}

Report judge(const Transcript& t, const std::vector<SetDesc>& battery, std::optional<CoverClass> target) {
  const Space& s = *t.spec.space;
  for (const auto& k : battery) {
    bool ok = target ? challenge_fits(s, *target, k) : (is_compact(s, k));
    if (!ok) throw Error(Errc::ClassMismatch, "battery challenge " + to_string(k) + " does not fit the target");
  }
  // A challenge must lie inside a single selected element, also for finite selections.
  std::vector<std::vector<OpenDesc>> per_round;
  for (const auto& r : t.rounds) per_round.push_back(r.selected);
  Report rep;
  for (const auto& k : battery) {
    Verdict v{k, std::nullopt, {}};
    for (std::size_t r = 0; r < per_round.size() && !v.round; ++r) {
      for (std::size_t j = 0; j < per_round[r].size(); ++j) {
        if (!contains(s, k, per_round[r][j])) continue;
        v.round = r;
        if (!t.spec.dual()) {
          v.indices = {t.rounds[r].indices[j]};
        }
        break;
      }
    }
    if (!v.round && !rep.uncovered) rep.uncovered = k;
    rep.verdicts.push_back(std::move(v));
  }
  if (target) {
    rep.p2_wins = !rep.uncovered;
  } else {
    std::vector<OpenDesc> all;
    for (const auto& r : t.rounds) all.insert(all.end(), r.selected.begin(), r.selected.end());
    rep.exhibited = point_outside(s, unite(all));
    rep.p2_wins = rep.uncovered.has_value() || rep.exhibited.has_value();
  }
  return rep;
}

P2CoverStrategy as_finite(const P2CoverStrategy& single) {
  P2CoverStrategy out = single;
  out.name = single.name + "/finite";
  out.selection = SelectionMode::Finite;
  return out;
}

Report judge(const Transcript& t) { return judge(t, judge_battery(t.spec), t.spec.target); }

}  // namespace selgame::game
