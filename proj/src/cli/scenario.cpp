#include "selgame/cli/scenario.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "selgame/game/adversary.hpp"
#include "selgame/strategies/baire.hpp"
#include "selgame/strategies/chq.hpp"
#include "selgame/strategies/markov.hpp"
#include "selgame/strategies/product.hpp"
#include "selgame/topology/serialize.hpp"

namespace selgame::cli {

using namespace topology;
using namespace game;
using json = nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::Config, what); }

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "' in " + j.dump());
  return j.at(key);
}

std::string ref_of(const json& j) {
  const json& r = need(j, "ref");
  if (!r.is_string()) bad("'ref' must be a string in " + j.dump());
  return r.get<std::string>();
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    bad(std::string("field '") + key + "': " + e.what());
  }
}

SpacePtr space_of(const json& j, const SpaceRegistry& reg, const SpacePtr& fallback) {
  if (!j.contains("space")) return fallback;
  std::string id = j.at("space").get<std::string>();
  if (!reg.has(id)) bad("unknown space '" + id + "'");
  return reg.get(id);
}

// A name on the strategy's space, {"space", "name"}, or a serialized family.
WitnessFamily witness_ref(const json& j, const SpaceRegistry& reg, const SpacePtr& s) {
  if (j.is_string()) {
    std::string name = j.get<std::string>();
    if (!s->witnesses.count(name)) bad("space " + s->id + " has no witness family '" + name + "'");
    return s->witness(name);
  }
  if (j.is_object() && j.contains("name")) return witness_ref(j.at("name"), reg, space_of(j, reg, s));
  return witness_from_json(j);
}

OpenDesc all_but(const PointId& x) {
  auto v = x.numeric();
  if (!v) bad("falsifier points must be numeric, got " + to_string(x));
  return unite(interval(std::nullopt, *v), interval(*v, std::nullopt));
}

struct Builder {
  const SpaceRegistry& reg;
  const Scenario& sc;
  std::uint64_t seed;

  P2CoverStrategy p2(const json& j, const SpacePtr& s) const {
    const std::string r = ref_of(j);
    if (r == "markov_from_cofinality") {
      SpacePtr on = space_of(j, reg, s);
      CoverClass cls = parse_cover_class(get_or<std::string>(j, "class", "K"));
      return strategies::markov_from_cofinality(witness_ref(need(j, "witness"), reg, on), cls);
    }
    if (r == "coerce") return strength_coercion(p2(need(j, "inner"), s), parse_strength(need(j, "strength").get<std::string>()));
    if (r == "as_finite") return as_finite(p2(need(j, "inner"), s));
    if (r == "random_bounded_selector") {
      return strategies::random_bounded_selector(get_or<std::size_t>(j, "bound", 4), get_or<std::size_t>(j, "pool", 256));
    }
    if (r == "product_k_rothberger" || r == "product_k_menger" || r == "markov_product_k_menger" ||
        r == "markov_product_k_rothberger") {
      if (s->kind != SpaceKind::Product) bad(r + " needs a product space, got " + s->id);
      SpacePtr x = s->parts.front();
      SpacePtr y = strategies::tail_space(s);
      if (r == "markov_product_k_rothberger") {
        return strategies::markov_product_k_rothberger(witness_ref(need(j, "x"), reg, x), witness_ref(need(j, "y"), reg, y));
      }
      auto sx = p2(need(j, "x"), x);
      auto sy = p2(need(j, "y"), y);
      if (r == "product_k_rothberger") return strategies::product_k_rothberger(sx, sy);
      if (r == "product_k_menger") return strategies::product_k_menger(sx, sy);
      return strategies::markov_product_k_menger(sx, sy);
    }
    bad("unknown P2 strategy '" + r + "'");
  }

  // Cover games: a strategy, or a fixed move list for the falsifier.
  std::variant<P1CoverStrategy, std::vector<Cover>> p1(const json& j) const {
    const SpacePtr& s = sc.spec.space;
    const std::string r = ref_of(j);
    if (r == "adversary") {
      CoverClass cls = j.contains("class") ? parse_cover_class(j.at("class").get<std::string>())
                                           : std::get<CoverClass>(sc.spec.p1_class);
      return adversary_strategy(s, cls);
    }
    if (r == "baire_adversary") return strategies::baire_adversary(s, get_or<std::size_t>(j, "bound", 4)).source;
    if (r == "markov_falsifier") {
      auto sigma = p2(j.contains("against") ? j.at("against") : sc.p2, s);
      SetDesc target = set_from_json(need(j, "bad"));
      PointId x = point_from_json(need(j, "point"));
      all_but(x);
      CoverClass cls = std::get<CoverClass>(sc.spec.p1_class);
      std::uint64_t base = seed;
      strategies::CoverBuilder build = [s, cls, base](const PointId& y, std::size_t n) {
        return strategies::prepend(adversary_cover(s, cls, base + n), all_but(y));
      };
      return strategies::markov_falsifier(sigma, target, std::vector<PointId>(sc.spec.horizon, x), build,
                                          sc.spec.horizon, seed);
    }
    bad("unknown P1 strategy '" + r + "'");
  }

  P1DualStrategy p1_dual(const json& j) const {
    const std::string r = ref_of(j);
    if (r == "chq_p1_compact_open") return strategies::chq_p1_compact_open();
    if (r == "chq_point_enumerator") {
      return strategies::chq_point_enumerator(sc.spec.space, get_or<std::size_t>(j, "per_round", 4));
    }
    bad("unknown dual P1 strategy '" + r + "'");
  }

  P2DualStrategy p2_dual(const json& j) const {
    const std::string r = ref_of(j);
    if (r == "chq_naive_p2") {
      return strategies::chq_naive_p2(get_or<std::size_t>(j, "per_round", 3), get_or<std::size_t>(j, "pool", 40));
    }
    if (r == "chq_p2_finite_open") return strategies::chq_p2_finite_open();
    bad("unknown dual P2 strategy '" + r + "'");
  }
};

std::variant<CoverClass, DualKind> parse_p1_class(const std::string& name) {
  for (auto d : {DualKind::CompactMove, DualKind::FiniteSetMove}) {
    if (name == dual_kind_name(d)) return d;
  }
  return parse_cover_class(name);
}

std::vector<SetDesc> battery_ref(const json& j, const Space& s) {
  if (j.is_array()) {
    std::vector<SetDesc> out;
    for (const auto& k : j) out.push_back(set_from_json(k));
    return out;
  }
  std::string name = j.get<std::string>();
  if (name == "compacts") return s.batteries.compacts;
  if (name == "relcompacts") return s.batteries.relcompacts;
  if (name == "finite_sets") return s.batteries.finite_sets;
  if (name == "points") {
    std::vector<SetDesc> out;
    for (const auto& p : s.batteries.points) out.push_back(point_set(p));
    return out;
  }
  bad("unknown battery '" + name + "'");
}

}  // namespace

Scenario parse_scenario(const json& doc, const SpaceRegistry& reg) {
  try {
    Scenario sc;
    sc.name = get_or<std::string>(doc, "name", "scenario");
    std::string id = need(doc, "space").get<std::string>();
    if (!reg.has(id)) bad("unknown space '" + id + "'");
    sc.spec.space = reg.get(id);
    sc.spec.selection = get_or<std::string>(doc, "selection", "single") == "finite" ? SelectionMode::Finite
                                                                                    : SelectionMode::Single;
    sc.spec.p1_class = parse_p1_class(need(doc, "p1_class").get<std::string>());
    std::string target = get_or<std::string>(doc, "target", "avoid");
    if (target == "avoid") {
      sc.spec.target.reset();
    } else {
      sc.spec.target = parse_cover_class(target);
    }
    sc.spec.horizon = need(doc, "horizon").get<std::size_t>();
    if (sc.spec.horizon > kMaxHorizon) bad("horizon " + std::to_string(sc.spec.horizon) + " exceeds " + std::to_string(kMaxHorizon));
    sc.spec.seed = get_or<std::uint64_t>(doc, "seed", 0);
    sc.spec.audit = get_or<bool>(doc, "audit", true);
    if (doc.contains("battery")) sc.spec.battery = battery_ref(doc.at("battery"), *sc.spec.space);
    sc.p1 = need(doc, "p1");
    sc.p2 = need(doc, "p2");

    Builder b{reg, sc, sc.spec.seed};
    if (sc.spec.dual()) {
      b.p1_dual(sc.p1);
      b.p2_dual(sc.p2);
    } else {
      b.p1(sc.p1);
      b.p2(sc.p2, sc.spec.space);
    }
    return sc;
  } catch (const json::exception& e) {
    bad(std::string("scenario: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::Config) throw;
    bad(std::string("scenario: ") + e.what());
  }
}

Scenario load_scenario(const std::string& path, const SpaceRegistry& reg) {
  std::ifstream in(path);
  if (!in) bad("cannot read scenario " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    bad(path + ": " + e.what());
  }
  return parse_scenario(doc, reg);
}

Transcript play_scenario(const Scenario& sc, const SpaceRegistry& reg, std::uint64_t seed, Human human, Console* io) {
  GameSpec spec = sc.spec;
  spec.seed = seed;
  Builder b{reg, sc, seed};
  if (spec.dual()) {
    if (human != Human::None) bad("interactive play supports cover games only");
    return run_dual_game(spec, b.p1_dual(sc.p1), b.p2_dual(sc.p2));
  }
  if (human != Human::None && !io) bad("interactive play needs a console");
  P2CoverStrategy p2 = human == Human::P2 ? console_p2(*io, spec.selection) : b.p2(sc.p2, spec.space);
  if (human == Human::P1) {
    return run_game(spec, console_p1(*io, spec.space, std::get<CoverClass>(spec.p1_class)), p2);
  }
  auto p1 = b.p1(sc.p1);
  if (auto* moves = std::get_if<std::vector<Cover>>(&p1)) return run_game(spec, *moves, p2);
  return run_game(spec, std::get<P1CoverStrategy>(p1), p2);
}

// ---- console strategies ----

namespace {

constexpr std::size_t kPage = 8;
constexpr std::size_t kMaxIndex = 1'000'000;

std::string read_line(Console& io, const std::string& prompt) {
  io.out << prompt << std::flush;
  std::string line;
  if (!std::getline(io.in, line)) bad("input ended");
  return line;
}

void show_elements(Console& io, const Cover& c, std::size_t from) {
  for (std::size_t i = from; i < from + kPage; ++i) {
    auto e = c.element(i);
    if (!e) break;
    io.out << "  [" << i << "] " << to_string(*e) << "\n";
  }
}

std::optional<std::vector<std::size_t>> parse_indices(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::size_t> out;
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::istringstream t(tok);
    long long v = -1;
    if (!(t >> v) || v < 0) return std::nullopt;
    std::string rest;
    if (t >> rest) return std::nullopt;
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

}  // namespace

P2CoverStrategy console_p2(Console& io, SelectionMode mode) {
  P2CoverStrategy s;
  s.name = "console";
  s.strength = Strength::Full;
  s.selection = mode;
  Console* con = &io;
  s.factory = [con, mode](std::uint64_t) {
    return [con, mode](const Window<Cover>& w, nlohmann::json*) -> std::vector<std::size_t> {
      const Cover& c = w.history.back();
      con->out << "round " << w.round << ": P1 plays " << c.name() << "\n";
      std::size_t page = 0;
      show_elements(*con, c, 0);
      const std::string prompt =
          mode == SelectionMode::Single ? "index (m for more): " : "indices, comma separated (m for more): ";
      for (;;) {
        std::string line = read_line(*con, prompt);
        if (line == "m") {
          page += kPage;
          show_elements(*con, c, page);
          continue;
        }
        auto idx = parse_indices(line);
        std::string why;
        if (!idx || idx->empty()) {
          why = "expected a nonnegative index";
        } else if (mode == SelectionMode::Single && idx->size() != 1) {
          why = "select exactly one element";
        } else {
          for (std::size_t i : *idx) {
            if (i >= kMaxIndex || !c.element(i)) why = "index " + std::to_string(i) + " is out of range";
          }
        }
        if (why.empty()) return *idx;
        con->out << "illegal: " << why << "\n";
      }
    };
  };
  return s;
}

P1CoverStrategy console_p1(Console& io, const SpacePtr& space, CoverClass cls) {
  P1CoverStrategy s;
  s.name = "console";
  s.owner = Owner::P1;
  s.strength = Strength::Full;
  Console* con = &io;
  s.factory = [con, space, cls](std::uint64_t seed) {
    return [con, space, cls, seed](const Window<Selected>& w, nlohmann::json*) -> Cover {
      if (!w.history.empty()) {
        const auto& last = w.history.back();
        con->out << "P2 selected";
        for (std::size_t i = 0; i < last.indices.size(); ++i) {
          con->out << " [" << last.indices[i] << "] " << to_string(last.elements[i]);
        }
        con->out << "\n";
      }
      std::vector<Cover> menu;
      for (std::uint64_t k = 0; k < 5; ++k) menu.push_back(adversary_cover(space, cls, splitmix64(seed + 31 * w.round + k)));
      menu.push_back(Cover::from_elements("whole", space, cls, {whole()}));
      con->out << "round " << w.round << ": choose a cover\n";
      for (std::size_t i = 0; i < menu.size(); ++i) {
        con->out << "  (" << i << ") " << menu[i].name() << ":";
        for (std::size_t k = 0; k < 3; ++k) {
          if (auto e = menu[i].element(k)) con->out << " " << to_string(*e);
        }
        con->out << " ...\n";
      }
      for (;;) {
        auto idx = parse_indices(read_line(*con, "cover: "));
        if (idx && idx->size() == 1 && idx->front() < menu.size()) return menu[idx->front()];
        con->out << "illegal: pick 0.." << menu.size() - 1 << "\n";
      }
    };
  };
  return s;
}

}  // namespace selgame::cli
