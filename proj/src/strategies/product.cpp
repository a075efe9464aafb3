#include "selgame/strategies/product.hpp"

#include <algorithm>
#include <map>

#include "detail.hpp"
#include "selgame/combinatorics/pairing.hpp"
#include "selgame/strategies/witness_ops.hpp"
#include "selgame/topology/serialize.hpp"

namespace selgame::strategies {

using namespace topology;
using detail::join_set;
using detail::rect_parts;
using game::Window;
using Decider = P2CoverStrategy::Decider;

SpacePtr tail_space(const SpacePtr& prod) {
  if (prod->kind != SpaceKind::Product || prod->arity() < 2) {
    throw Error(Errc::TypeMismatch, prod->id + " is not a product");
  }
  return prod->arity() == 2 ? prod->parts[1] : prod->tail;
}

namespace {

// 𝒱(K): the Y-projections of the refined elements whose X-projection holds K.
// Other indices repeat a fixed member, so every index maps to a member.
struct Slice {
  Cover cover;
  std::function<std::size_t(std::size_t)> source;
};

Slice make_slice(const Refinement& r, const SpacePtr& prod, const SetDesc& k, const std::string& name) {
  const std::size_t n = prod->arity();
  SpacePtr x = prod->parts[0];
  SpacePtr y = tail_space(prod);
  Cover rc = r.cover;
  auto fallback = std::make_shared<std::optional<std::size_t>>();
  auto source = [rc, x, y, k, n, fallback](std::size_t i) -> std::size_t {
    if (auto e = rc.element(i)) {
      auto p = rect_parts(*e, n);
      if (p && contains(*x, k, p->first)) return i;
    }
    if (!*fallback) {
      auto f = rc.select(join_set(k, point_set(point_at(*y, 0)), n));
      if (!f) throw Error(Errc::SelectorFailure, "no refined element holds " + to_string(k) + " in its first factor");
      *fallback = *f;
    }
    return **fallback;
  };
  auto elem = [rc, n, source](std::size_t i) -> std::optional<OpenDesc> {
    if (!rc.element(i)) return std::nullopt;
    auto e = rc.element(source(i));
    return rect_parts(*e, n)->second;
  };
  auto sel = [rc, k, n](const SetDesc& l) { return rc.select(join_set(k, l, n)); };
  return {Cover(name, y, CoverClass::K, elem, sel), source};
}

using SliceMap = std::map<std::string, Slice>;

const Slice& slice_for(SliceMap& m, const Refinement& r, const SpacePtr& prod, const SetDesc& k,
                       const std::string& name) {
  std::string key = canonical_key(k);
  auto it = m.find(key);
  if (it == m.end()) it = m.emplace(key, make_slice(r, prod, k, name)).first;
  return it->second;
}

std::size_t only(const std::vector<std::size_t>& picks, const char* who) {
  if (picks.size() != 1) {
    throw Error(Errc::SelectorFailure, std::string(who) + " returned " + std::to_string(picks.size()) + " indices");
  }
  return picks.front();
}

std::size_t parent_of(const Refinement& r, std::size_t i) {
  auto p = r.parent(i);
  if (!p) throw Error(Errc::SelectorFailure, "refined index " + std::to_string(i) + " has no parent");
  return *p;
}

SetDesc interned(const InternTable<SetDesc>& ks, std::size_t i) {
  auto k = ks.at(i);
  if (!k) throw Error(Errc::SelectorFailure, "first factor strategy chose index " + std::to_string(i) +
                                                 ", which names no compact");
  return *k;
}

OpenDesc x_core(const Refinement& r, const std::vector<std::size_t>& g, std::size_t n) {
  OpenDesc u = whole();
  for (std::size_t i : g) u = intersect(u, rect_parts(*r.cover.element(i), n)->first);
  return u;
}

void require(const P2CoverStrategy& s, game::SelectionMode m) {
  if (s.owner != game::Owner::P2 || s.selection != m) {
    throw Error(Errc::Config, "factor strategy " + s.name + " has the wrong owner or selection mode");
  }
}

void check_product(const Cover& c) {
  if (c.space()->kind != SpaceKind::Product) {
    throw Error(Errc::TypeMismatch, "cover " + c.name() + " is not over a product space");
  }
}

void check_range(const std::vector<Nat>& r, std::size_t n, std::size_t j) {
  for (Nat v : r) {
    if (v >= n) {
      throw Error(Errc::ConstraintViolation, "round " + std::to_string(n) + ": sequence " + std::to_string(j) +
                                                 " names round " + std::to_string(v));
    }
  }
}

nlohmann::json words(const std::vector<Nat>& s) { return nlohmann::json(s); }

// ---- strategic k-Rothberger ----

struct RothRound {
  Cover u;
  Cover v;
};

struct RothState {
  std::vector<RothRound> rounds;
};

std::vector<std::size_t> roth_round(RothState& st, const combinatorics::PairingFamily& pf, const Decider& dx,
                                    const Decider& dy, const Cover& w, std::size_t n, nlohmann::json* audit) {
  check_product(w);
  const SpacePtr prod = w.space();
  const std::size_t arity = prod->arity();
  auto [j, k] = combinatorics::beta_inverse(pf, n);
  const auto s = combinatorics::enum_finseq(j);
  check_range(s, n, j);

  Refinement r = rectangle_refine(w);
  auto ks = std::make_shared<InternTable<SetDesc>>();
  auto slices = std::make_shared<SliceMap>();
  auto chosen = std::make_shared<std::map<std::string, std::size_t>>();
  std::vector<Cover> prefix;
  for (Nat p : s) prefix.push_back(st.rounds[p].v);
  const std::string tag = "@" + std::to_string(n);

  auto w_of = [r, prod, slices, chosen, dy, prefix, tag](const SetDesc& kk) -> std::size_t {
    std::string key = canonical_key(kk);
    if (auto it = chosen->find(key); it != chosen->end()) return it->second;
    const Slice& sl = slice_for(*slices, r, prod, kk, "V" + tag);
    Window<Cover> wy{prefix.size(), prefix};
    wy.history.push_back(sl.cover);
    std::size_t idx = sl.source(only(dy(wy, nullptr), "second factor strategy"));
    (*chosen)[key] = idx;
    return idx;
  };
  auto u_elem = [ks, w_of, r, arity](std::size_t i) -> std::optional<OpenDesc> {
    auto kk = ks->at(i);
    if (!kk) return std::nullopt;
    return rect_parts(*r.cover.element(w_of(*kk)), arity)->first;
  };
  auto u_sel = [ks](const SetDesc& kk) -> std::optional<std::size_t> {
    return ks->intern(canonical_key(kk), kk);
  };
  Cover u("U" + tag, prod->parts[0], CoverClass::K, u_elem, u_sel);

  Window<Cover> wx{k, {}};
  for (Nat p = 0; p < k; ++p) wx.history.push_back(st.rounds[pf.beta(j, p)].u);
  wx.history.push_back(u);
  SetDesc kn = interned(*ks, only(dx(wx, nullptr), "first factor strategy"));
  std::size_t idx = w_of(kn);
  Cover vn = slice_for(*slices, r, prod, kn, "V" + tag).cover;
  st.rounds.push_back({u, vn});
  std::size_t reply = parent_of(r, idx);
  if (audit) {
    *audit = {{"n", n},          {"j", j},          {"k", k}, {"s", words(s)}, {"range_ok", true},
              {"K", to_json(kn)}, {"W", to_json(*r.cover.element(idx))}};
  }
  return {reply};
}

// ---- strategic k-Menger ----

struct MengerRound {
  Refinement r;
  std::shared_ptr<SliceMap> slices;
  // 𝐅 in ascending interned order.
  std::vector<SetDesc> f;
  Cover u;
};

struct MengerState {
  std::vector<MengerRound> rounds;
};

SetDesc pick_from(const std::vector<SetDesc>& f, Nat u) {
  if (f.empty()) return points({});
  return f[u % f.size()];
}

std::vector<std::size_t> menger_round(MengerState& st, const combinatorics::PairingFamily& pf, const Decider& dx,
                                      const Decider& dy, const Cover& w, std::size_t n, nlohmann::json* audit) {
  check_product(w);
  const SpacePtr prod = w.space();
  const std::size_t arity = prod->arity();
  auto [j, k] = combinatorics::beta_inverse(pf, n);
  const auto sp = combinatorics::enum_split_pairs(j);
  check_range(sp.minus, n, j);

  Refinement r = rectangle_refine(w);
  auto ks = std::make_shared<InternTable<SetDesc>>();
  auto slices = std::make_shared<SliceMap>();
  auto chosen = std::make_shared<std::map<std::string, std::vector<std::size_t>>>();
  std::vector<Cover> prefix;
  for (std::size_t p = 0; p < sp.minus.size(); ++p) {
    MengerRound& old = st.rounds[sp.minus[p]];
    SetDesc kk = pick_from(old.f, sp.plus[p]);
    prefix.push_back(slice_for(*old.slices, old.r, prod, kk, "V@" + std::to_string(sp.minus[p])).cover);
  }
  const std::string tag = "@" + std::to_string(n);

  auto g_of = [r, prod, slices, chosen, dy, prefix, tag](const SetDesc& kk) -> std::vector<std::size_t> {
    std::string key = canonical_key(kk);
    if (auto it = chosen->find(key); it != chosen->end()) return it->second;
    const Slice& sl = slice_for(*slices, r, prod, kk, "V" + tag);
    Window<Cover> wy{prefix.size(), prefix};
    wy.history.push_back(sl.cover);
    std::vector<std::size_t> g;
    for (std::size_t i : dy(wy, nullptr)) g.push_back(sl.source(i));
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    (*chosen)[key] = g;
    return g;
  };
  auto u_elem = [ks, g_of, r, arity](std::size_t i) -> std::optional<OpenDesc> {
    auto kk = ks->at(i);
    if (!kk) return std::nullopt;
    return x_core(r, g_of(*kk), arity);
  };
  auto u_sel = [ks](const SetDesc& kk) -> std::optional<std::size_t> {
    return ks->intern(canonical_key(kk), kk);
  };
  Cover u("U" + tag, prod->parts[0], CoverClass::K, u_elem, u_sel);

  Window<Cover> wx{k, {}};
  for (Nat p = 0; p < k; ++p) wx.history.push_back(st.rounds[pf.beta(j, p)].u);
  wx.history.push_back(u);
  auto picks = dx(wx, nullptr);
  std::sort(picks.begin(), picks.end());
  picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
  std::vector<SetDesc> f;
  std::vector<std::size_t> reply;
  nlohmann::json fj = nlohmann::json::array();
  for (std::size_t i : picks) {
    SetDesc kk = interned(*ks, i);
    for (std::size_t g : g_of(kk)) reply.push_back(parent_of(r, g));
    fj.push_back(to_json(kk));
    f.push_back(std::move(kk));
  }
  std::sort(reply.begin(), reply.end());
  reply.erase(std::unique(reply.begin(), reply.end()), reply.end());
  st.rounds.push_back({r, slices, f, u});
  if (audit) {
    *audit = {{"n", n}, {"j", j}, {"k", k}, {"s_minus", words(sp.minus)}, {"s_plus", words(sp.plus)},
              {"range_ok", true}, {"F", fj}};
  }
  return reply;
}

template <class State, class RoundFn>
P2CoverStrategy replayed(std::string name, game::SelectionMode mode, const P2CoverStrategy& sx,
                         const P2CoverStrategy& sy, combinatorics::RangeConstraint rc, RoundFn round_fn) {
  P2CoverStrategy s;
  s.name = std::move(name);
  s.owner = game::Owner::P2;
  s.strength = game::Strength::Full;
  s.selection = mode;
  auto pf = combinatorics::build_pairing(std::move(rc));
  s.factory = [sx, sy, pf, round_fn](std::uint64_t seed) -> Decider {
    Decider dx = sx.factory(game::splitmix64(seed));
    Decider dy = sy.factory(game::splitmix64(seed + 1));
    auto st = std::make_shared<State>();
    return [st, pf, dx, dy, round_fn](const Window<Cover>& win, nlohmann::json* audit) {
      if (win.history.size() != win.round + 1) throw Error(Errc::Config, "full strategy needs the whole history");
      if (st->rounds.size() != win.round) {
        st->rounds.clear();
        for (std::size_t p = 0; p < win.round; ++p) round_fn(*st, *pf, dx, dy, win.history[p], p, nullptr);
      }
      return round_fn(*st, *pf, dx, dy, win.history.back(), win.round, audit);
    };
  };
  return s;
}

}  // namespace

P2CoverStrategy product_k_rothberger(const P2CoverStrategy& sx, const P2CoverStrategy& sy) {
  require(sx, game::SelectionMode::Single);
  require(sy, game::SelectionMode::Single);
  return replayed<RothState>("product_k_rothberger(" + sx.name + "," + sy.name + ")", game::SelectionMode::Single,
                             sx, sy, combinatorics::RangeConstraint::finseq_range(), roth_round);
}

P2CoverStrategy product_k_menger(const P2CoverStrategy& sx, const P2CoverStrategy& sy) {
  require(sx, game::SelectionMode::Finite);
  require(sy, game::SelectionMode::Finite);
  return replayed<MengerState>("product_k_menger(" + sx.name + "," + sy.name + ")", game::SelectionMode::Finite, sx,
                               sy, combinatorics::RangeConstraint::split_minus_range(), menger_round);
}

P2CoverStrategy markov_product_k_rothberger(const WitnessFamily& wx, const WitnessFamily& wy) {
  P2CoverStrategy s;
  s.name = "markov_product_k_rothberger";
  s.owner = game::Owner::P2;
  s.strength = game::Strength::Markov;
  s.factory = [wx, wy](std::uint64_t) -> Decider {
    return [wx, wy](const Window<Cover>& win, nlohmann::json* audit) -> std::vector<std::size_t> {
      if (win.history.empty()) throw Error(Errc::Config, "no cover to answer");
      const Cover& c = win.history.back();
      check_product(c);
      const SpacePtr prod = c.space();
      auto [a, b] = combinatorics::cantor_unpair(win.round);
      SetDesc target = join_set(wx.at(a), wy.at(b), prod->arity());
      Refinement r = rectangle_refine(c);
      auto i = r.cover.select(target);
      std::optional<OpenDesc> e;
      if (i) e = r.cover.element(*i);
      if (!e || !rect_parts(*e, prod->arity()) || !contains(*prod, target, *e)) {
        throw Error(Errc::SelectorFailure, "no rectangle of " + c.name() + " holds " + to_string(target));
      }
      std::size_t reply = parent_of(r, *i);
      if (audit) *audit = {{"n", win.round}, {"a", a}, {"b", b}, {"A", to_json(target)}, {"rect", to_json(*e)}};
      return {reply};
    };
  };
  return s;
}

P2CoverStrategy markov_product_k_menger(const P2CoverStrategy& sx, const P2CoverStrategy& sy) {
  require(sx, game::SelectionMode::Finite);
  require(sy, game::SelectionMode::Finite);
  if (sx.strength > game::Strength::Markov || sy.strength > game::Strength::Markov) {
    throw Error(Errc::Unsupported, "markov_product_k_menger needs Markov factor strategies");
  }
  P2CoverStrategy s;
  s.name = "markov_product_k_menger(" + sx.name + "," + sy.name + ")";
  s.owner = game::Owner::P2;
  s.strength = game::Strength::Markov;
  s.selection = game::SelectionMode::Finite;
  s.factory = [sx, sy](std::uint64_t seed) -> Decider {
    Decider dx = sx.factory(game::splitmix64(seed));
    Decider dy = sy.factory(game::splitmix64(seed + 1));
    return [dx, dy](const Window<Cover>& win, nlohmann::json* audit) -> std::vector<std::size_t> {
      if (win.history.empty()) throw Error(Errc::Config, "no cover to answer");
      const Cover& w = win.history.back();
      check_product(w);
      const SpacePtr prod = w.space();
      const std::size_t arity = prod->arity();
      auto [j, k] = combinatorics::cantor_unpair(win.round);
      Refinement r = rectangle_refine(w);
      auto ks = std::make_shared<InternTable<SetDesc>>();
      auto slices = std::make_shared<SliceMap>();
      auto chosen = std::make_shared<std::map<std::string, std::vector<std::size_t>>>();
      const std::size_t kk_round = k;
      auto gamma = [r, prod, slices, chosen, dy, kk_round](const SetDesc& kk) -> std::vector<std::size_t> {
        std::string key = canonical_key(kk);
        if (auto it = chosen->find(key); it != chosen->end()) return it->second;
        const Slice& sl = slice_for(*slices, r, prod, kk, "W|K");
        std::vector<std::size_t> g;
        for (std::size_t i : dy(Window<Cover>{kk_round, {sl.cover}}, nullptr)) g.push_back(sl.source(i));
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        (*chosen)[key] = g;
        return g;
      };
      auto x_elem = [ks, gamma, r, arity](std::size_t i) -> std::optional<OpenDesc> {
        auto kk = ks->at(i);
        if (!kk) return std::nullopt;
        return x_core(r, gamma(*kk), arity);
      };
      auto x_sel = [ks](const SetDesc& kk) -> std::optional<std::size_t> {
        return ks->intern(canonical_key(kk), kk);
      };
      Cover wxk("W^X", prod->parts[0], CoverClass::K, x_elem, x_sel);
      std::vector<std::size_t> reply;
      nlohmann::json fj = nlohmann::json::array();
      for (std::size_t i : dx(Window<Cover>{j, {wxk}}, nullptr)) {
        SetDesc kk = interned(*ks, i);
        for (std::size_t g : gamma(kk)) reply.push_back(parent_of(r, g));
        fj.push_back(to_json(kk));
      }
      std::sort(reply.begin(), reply.end());
      reply.erase(std::unique(reply.begin(), reply.end()), reply.end());
      if (audit) *audit = {{"n", win.round}, {"j", j}, {"k", k}, {"F", fj}};
      return reply;
    };
  };
  return s;
}

}  // namespace selgame::strategies
