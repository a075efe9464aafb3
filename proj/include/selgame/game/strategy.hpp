#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "selgame/error.hpp"
#include "selgame/topology/cover.hpp"

namespace selgame::game {

using topology::Cover;
using topology::CoverClass;
using topology::OpenDesc;
using topology::PointId;
using topology::SetDesc;
using topology::SpacePtr;

enum class Owner { P1, P2 };
// Ordered by window size.
enum class Strength { Constant, Predetermined, Markov, Full };
enum class SelectionMode { Single, Finite };

const char* strength_name(Strength s);
Strength parse_strength(const std::string& name);

// What a strategy is shown in round `round`: the opponent's moves so far,
// oldest first. For P2 the current P1 move is last.
template <class Seen>
struct Window {
  std::size_t round = 0;
  std::vector<Seen> history;
};

template <class Seen>
Window<Seen> narrow(const Window<Seen>& w, Strength s) {
  switch (s) {
    case Strength::Full: return w;
    case Strength::Markov: {
      Window<Seen> out{w.round, {}};
      if (!w.history.empty()) out.history.push_back(w.history.back());
      return out;
    }
    case Strength::Predetermined: return {w.round, {}};
    case Strength::Constant: return {0, {}};
  }
  return {};
}

template <class Seen, class Reply>
struct Strategy {
  // `audit` is non-null when the game records bookkeeping.
  using Decider = std::function<Reply(const Window<Seen>&, nlohmann::json* audit)>;
  // Each call starts a fresh game with its own bookkeeping.
  using Factory = std::function<Decider(std::uint64_t seed)>;

  std::string name;
  Owner owner = Owner::P2;
  Strength strength = Strength::Full;
  SelectionMode selection = SelectionMode::Single;
  Factory factory;
};

// What P1 sees of a P2 reply in a cover game.
struct Selected {
  std::vector<std::size_t> indices;
  std::vector<OpenDesc> elements;
};

using P2CoverStrategy = Strategy<Cover, std::vector<std::size_t>>;
using P1CoverStrategy = Strategy<Selected, Cover>;
using P1DualStrategy = Strategy<OpenDesc, SetDesc>;
using P2DualStrategy = Strategy<SetDesc, OpenDesc>;

// Presents h under the wider window `to`; h still only sees its own window.
template <class Seen, class Reply>
Strategy<Seen, Reply> strength_coercion(const Strategy<Seen, Reply>& h, Strength to) {
  if (to < h.strength) {
    throw Error(Errc::Unsupported, std::string("coercing ") + strength_name(h.strength) + " strategy " + h.name +
                                       " to " + strength_name(to) + " would widen its window");
  }
  Strategy<Seen, Reply> out = h;
  out.strength = to;
  auto inner = h.factory;
  Strength own = h.strength;
  out.factory = [inner, own](std::uint64_t seed) {
    auto d = inner(seed);
    return [d, own](const Window<Seen>& w, nlohmann::json* audit) { return d(narrow(w, own), audit); };
  };
  return out;
}

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace selgame::game
