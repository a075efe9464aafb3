#include "selgame/strategies/markov.hpp"

#include "selgame/topology/serialize.hpp"

namespace selgame::strategies {

using namespace topology;
using game::Window;

P2CoverStrategy markov_from_cofinality(const WitnessFamily& w, CoverClass cls) {
  if (w.members.empty()) throw Error(Errc::MissingWitness, "markov_from_cofinality needs a nonempty family");
  P2CoverStrategy s;
  s.name = std::string("markov_from_cofinality[") + witness_kind_name(w.kind) + "]";
  s.owner = game::Owner::P2;
  s.strength = game::Strength::Markov;
  s.factory = [w, cls](std::uint64_t) {
    return [w, cls](const Window<Cover>& win, nlohmann::json* audit) -> std::vector<std::size_t> {
      if (win.history.empty()) throw Error(Errc::Config, "no cover to answer");
      const Cover& c = win.history.back();
      const SetDesc& a = w.at(win.round);
      auto i = c.select(a);
      std::optional<OpenDesc> e;
      if (i) e = c.element(*i);
      if (!e || !contains(*c.space(), a, *e)) {
        throw Error(Errc::SelectorFailure, "cover " + c.name() + " has no selected element containing " + to_string(a) +
                                               " (expected a " + cover_class_name(cls) + " cover)");
      }
      if (audit) *audit = {{"n", win.round}, {"A", to_json(a)}, {"index", *i}};
      return {*i};
    };
  };
  return s;
}

Cover prepend(const Cover& c, const OpenDesc& first) {
  auto elem = [c, first](std::size_t i) -> std::optional<OpenDesc> {
    if (i == 0) return first;
    return c.element(i - 1);
  };
  auto sel = [c, first](const SetDesc& k) -> std::optional<std::size_t> {
    if (contains(*c.space(), k, first)) return 0;
    auto i = c.select(k);
    if (!i) return std::nullopt;
    return *i + 1;
  };
  std::optional<std::size_t> size;
  if (c.size()) size = *c.size() + 1;
  return Cover(c.name() + "+", c.space(), c.cover_class(), elem, sel, size);
}

std::vector<Cover> markov_falsifier(const P2CoverStrategy& sigma, const SetDesc& bad, const std::vector<PointId>& xs,
                                    const CoverBuilder& builder, std::size_t horizon, std::uint64_t seed) {
  if (sigma.strength == game::Strength::Full) {
    throw Error(Errc::Unsupported, "falsifier needs a Markov strategy, got " + sigma.name);
  }
  if (xs.size() < horizon) throw Error(Errc::Config, "falsifier needs one point per round");
  auto d = sigma.factory(game::splitmix64(seed));
  std::vector<Cover> out;
  for (std::size_t n = 0; n < horizon; ++n) {
    if (!in_set(xs[n], bad)) {
      throw Error(Errc::Config, "point " + to_string(xs[n]) + " is not in " + to_string(bad));
    }
    Cover c = builder(xs[n], n);
    auto picks = d(Window<Cover>{n, {c}}, nullptr);
    for (std::size_t i : picks) {
      auto e = c.element(i);
      if (e && member(*c.space(), xs[n], *e)) {
        throw Error(Errc::Unsupported, "round " + std::to_string(n) + ": " + sigma.name + " selects " + to_string(*e) +
                                           ", which contains " + to_string(xs[n]));
      }
    }
    out.push_back(c);
  }
  return out;
}

namespace {

bool same_open(const Space& s, const OpenDesc& a, const OpenDesc& b) {
  return open_subset(s, a, b) && open_subset(s, b, a);
}

}  // namespace

DefeatingCover galvin_defeating_cover(const SpacePtr& space, CoverClass cls, const ChoiceTable& table,
                                      const std::vector<SetDesc>& battery, const NeighbourhoodSource& witnesses) {
  DefeatingCover out;
  for (const auto& c : table.family) out.range.push_back(table.phi(c));
  auto in_range = [&](const OpenDesc& u) {
    for (const auto& r : out.range) {
      if (same_open(*space, u, r)) return true;
    }
    return false;
  };
  for (const auto& a : battery) {
    std::optional<OpenDesc> pick;
    for (const auto& u : witnesses(a)) {
      if (contains(*space, a, u) && !in_range(u)) {
        pick = u;
        break;
      }
    }
    if (!pick) throw Error(Errc::MissingWitness, "no neighbourhood of " + to_string(a) + " avoids the choice range");
    out.chosen.push_back(*pick);
  }
  out.cover = Cover::from_elements("defeating", space, cls, out.chosen);
  for (const auto& a : battery) {
    auto i = out.cover.select_checked(a);
    if (!i) throw Error(Errc::SelectorFailure, "defeating cover misses " + to_string(a));
  }
  for (const auto& u : out.chosen) {
    if (in_range(u)) throw Error(Errc::SelectorFailure, "defeating cover meets the choice range at " + to_string(u));
  }
  return out;
}

}  // namespace selgame::strategies
