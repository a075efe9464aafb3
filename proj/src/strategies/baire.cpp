#include "selgame/strategies/baire.hpp"

#include <algorithm>
#include <set>

#include "selgame/game/adversary.hpp"

namespace selgame::strategies {

using namespace topology;
using game::Window;

Word escape_word(const std::vector<Word>& selected, std::size_t min_length) {
  std::size_t len = min_length;
  for (const auto& t : selected) len = std::max(len, t.size());
  Word f;
  for (std::size_t k = 0; k < len; ++k) {
    std::set<Nat> taken;
    for (const auto& t : selected) {
      if (t.size() > k && std::equal(f.begin(), f.end(), t.begin())) taken.insert(t[k]);
    }
    Nat d = 0;
    while (taken.count(d)) ++d;
    f.push_back(d);
  }
  return f;
}

BaireAdversary baire_adversary(const SpacePtr& baire, std::size_t bound) {
  if (baire->kind != SpaceKind::Baire) throw Error(Errc::TypeMismatch, baire->id + " is not a Baire model");
  BaireAdversary out;
  out.bound = bound;
  Cover all = game::cylinder_cover(baire, CoverClass::O);
  out.source.name = "baire_adversary";
  out.source.owner = game::Owner::P1;
  out.source.strength = game::Strength::Constant;
  out.source.factory = [all](std::uint64_t) {
    return [all](const Window<game::Selected>&, nlohmann::json*) { return all; };
  };
  out.escape = [bound](const Transcript& t) {
    std::vector<Word> selected;
    for (const auto& r : t.rounds) {
      if (r.selected.size() > bound) {
        throw Error(Errc::Config, "round " + std::to_string(r.n) + " selects " + std::to_string(r.selected.size()) +
                                      " cylinders, more than the bound " + std::to_string(bound));
      }
      for (const auto& e : r.selected) {
        for (const auto& a : e.atoms) {
          auto c = std::get_if<atoms::Cylinder>(&a);
          if (!c) throw Error(Errc::TypeMismatch, "selected set " + to_string(e) + " is not a cylinder");
          selected.push_back(c->prefix);
        }
      }
    }
    return escape_word(selected, t.rounds.size());
  };
  return out;
}

P2CoverStrategy random_bounded_selector(std::size_t bound, std::size_t pool) {
  P2CoverStrategy s;
  s.name = "random_bounded(" + std::to_string(bound) + ")";
  s.owner = game::Owner::P2;
  s.strength = game::Strength::Markov;
  s.selection = game::SelectionMode::Finite;
  s.factory = [bound, pool](std::uint64_t seed) -> P2CoverStrategy::Decider {
    return [bound, pool, seed](const Window<Cover>& w, nlohmann::json*) {
      std::uint64_t r = game::splitmix64(seed + w.round);
      std::size_t count = r % (bound + 1);
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < count; ++i) {
        r = game::splitmix64(r);
        out.push_back(r % pool);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    };
  };
  return s;
}

}  // namespace selgame::strategies
