#include "selgame/strategies/omega.hpp"

#include <map>
#include <mutex>

#include "selgame/combinatorics/pairing.hpp"
#include "selgame/topology/cover_ops.hpp"
#include "selgame/topology/serialize.hpp"

namespace selgame::strategies {

using namespace topology;
using game::Window;
using Decider = P2CoverStrategy::Decider;

SpacePtr power_of(const SpacePtr& base, std::size_t m) {
  if (m == 0) return base;
  static std::mutex mu;
  static std::map<std::pair<const Space*, std::size_t>, std::pair<SpacePtr, SpacePtr>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{base.get(), m}];
  if (slot.first != base) slot = {base, make_power(base->id + "^" + std::to_string(m + 1), base, m + 1)};
  return slot.second;
}

namespace {

// Every coordinate of a set in a power, as a set of the base.
SetDesc coordinates(const SetDesc& c) {
  if (auto ps = std::get_if<sets::Points>(&c.v)) {
    std::vector<PointId> out;
    for (const auto& p : ps->points) {
      if (auto cs = p.coords()) {
        out.insert(out.end(), cs->begin(), cs->end());
      } else {
        out.push_back(p);
      }
    }
    return points(std::move(out));
  }
  if (auto pr = std::get_if<sets::Product>(&c.v)) return set_union(pr->factors);
  if (auto u = std::get_if<sets::Union>(&c.v)) {
    std::vector<SetDesc> parts;
    for (const auto& p : u->parts) parts.push_back(coordinates(p));
    return set_union(std::move(parts));
  }
  throw Error(Errc::NotExpressible, "cannot read coordinates of " + to_string(c));
}

Decider narrowed(const P2CoverStrategy& s, std::uint64_t seed) {
  Decider d = s.factory(seed);
  game::Strength own = s.strength;
  return [d, own](const Window<Cover>& w, nlohmann::json* audit) { return d(game::narrow(w, own), audit); };
}

std::size_t only(const std::vector<std::size_t>& picks, const std::string& who) {
  if (picks.size() != 1) {
    throw Error(Errc::SelectorFailure, who + " returned " + std::to_string(picks.size()) + " indices");
  }
  return picks.front();
}

}  // namespace

Cover lift_to_power(const Cover& c, std::size_t m, const SpacePtr& power) {
  if (m == 0) return c;
  const std::size_t n = m + 1;
  auto elem = [c, n](std::size_t i) -> std::optional<OpenDesc> {
    auto e = c.element(i);
    if (!e) return std::nullopt;
    return rectangle(std::vector<OpenDesc>(n, *e));
  };
  auto sel = [c](const SetDesc& k) { return c.select(coordinates(k)); };
  return Cover(c.name() + "^" + std::to_string(n), power, c.cover_class(), elem, sel, c.size());
}

// ---- unfolding ----

namespace {

struct UnfoldRun {
  UnfoldState s;
  std::size_t rounds = 0;
  std::vector<OpenDesc> block;
};

constexpr std::size_t kEmptyBlocks = 64;

void close_block(UnfoldRun& st, const Decider& d0, const GalvinExtractor& g) {
  const std::size_t b = st.s.w.size();
  OpenDesc target = unite(st.block);
  auto w = g.realize(st.s.w, target);
  if (!w) {
    throw Error(Errc::MissingWitness, "extractor has no cover realizing block " + std::to_string(b) + " answer " +
                                          to_string(target));
  }
  std::vector<Cover> hist = st.s.w;
  hist.push_back(*w);
  std::size_t i = only(d0(Window<Cover>{b, hist}, nullptr), "omega strategy");
  auto e = w->element(i);
  const Space& sp = *w->space();
  if (!e || !open_subset(sp, *e, target) || !open_subset(sp, target, *e)) {
    throw Error(Errc::SelectorFailure, "realized cover for block " + std::to_string(b) + " is answered with " +
                                           (e ? to_string(*e) : std::string("nothing")) + ", not " +
                                           to_string(target));
  }
  st.s.w.push_back(*w);
  st.block.clear();
}

void open_block(UnfoldRun& st, const Decider& d0, const GalvinExtractor& g) {
  for (std::size_t tries = 0; tries < kEmptyBlocks; ++tries) {
    auto f = g.core(st.s.w);
    long long prev = st.s.m.empty() ? -1 : st.s.m.back();
    st.s.f.push_back(f);
    st.s.m.push_back(prev + static_cast<long long>(f.size()));
    st.s.x.insert(st.s.x.end(), f.begin(), f.end());
    if (!f.empty()) return;
    close_block(st, d0, g);
  }
  throw Error(Errc::MissingWitness, "extractor keeps returning empty cores");
}

std::vector<std::size_t> unfold_round(UnfoldRun& st, const Decider& d0, const GalvinExtractor& g, const Cover& u,
                                      nlohmann::json* audit) {
  const std::size_t t = st.rounds;
  if (st.s.m.empty() || static_cast<long long>(t) > st.s.m.back()) open_block(st, d0, g);
  const PointId& x = st.s.x[t];
  auto i = u.select(point_set(x));
  std::optional<OpenDesc> e;
  if (i) e = u.element(*i);
  if (!e || !member(*u.space(), x, *e)) {
    throw Error(Errc::SelectorFailure, "cover " + u.name() + " selects no element containing " + to_string(x));
  }
  st.block.push_back(*e);
  const std::size_t b = st.s.m.size() - 1;
  const long long mb = st.s.m.back();
  const long long prev = b == 0 ? -1 : st.s.m[b - 1];
  if (audit) {
    *audit = {{"t", t},          {"block", b},
              {"M", mb},         {"M_prev", prev},
              {"F_size", st.s.f.back().size()}, {"x", to_json(x)}};
  }
  ++st.rounds;
  if (static_cast<long long>(t) == mb) close_block(st, d0, g);
  return {*i};
}

}  // namespace

P2CoverStrategy unfold_omega_to_open_rothberger(const P2CoverStrategy& sigma0, const GalvinExtractor& g) {
  P2CoverStrategy s;
  s.name = "unfold(" + sigma0.name + ")";
  s.owner = game::Owner::P2;
  s.strength = game::Strength::Full;
  s.factory = [sigma0, g](std::uint64_t seed) -> Decider {
    Decider d0 = narrowed(sigma0, seed);
    auto st = std::make_shared<UnfoldRun>();
    return [st, d0, g](const Window<Cover>& win, nlohmann::json* audit) {
      if (win.history.size() != win.round + 1) throw Error(Errc::Config, "full strategy needs the whole history");
      if (st->rounds != win.round) {
        *st = UnfoldRun{};
        for (std::size_t p = 0; p < win.round; ++p) unfold_round(*st, d0, g, win.history[p], nullptr);
      }
      return unfold_round(*st, d0, g, win.history.back(), audit);
    };
  };
  return s;
}

UnfoldState unfold_state_from_audit(const std::vector<nlohmann::json>& audits) {
  UnfoldState out;
  for (const auto& a : audits) {
    std::size_t b = a.at("block").get<std::size_t>();
    long long m = a.at("M").get<long long>();
    long long prev = a.at("M_prev").get<long long>();
    std::size_t fsize = a.at("F_size").get<std::size_t>();
    if (m != prev + static_cast<long long>(fsize)) {
      throw Error(Errc::ConstraintViolation, "block " + std::to_string(b) + ": M = " + std::to_string(m) +
                                                 " but M_prev + #F = " + std::to_string(prev + fsize));
    }
    if (b < out.m.size()) {
      if (out.m[b] != m) throw Error(Errc::ConstraintViolation, "block " + std::to_string(b) + " changed its M");
    } else {
      while (out.m.size() < b) out.m.push_back(out.m.empty() ? -1 : out.m.back());
      long long last = out.m.empty() ? -1 : out.m.back();
      if (prev != last) {
        throw Error(Errc::ConstraintViolation, "block " + std::to_string(b) + " starts after " +
                                                   std::to_string(prev) + ", expected " + std::to_string(last));
      }
      out.m.push_back(m);
      out.f.emplace_back();
    }
    out.x.push_back(point_from_json(a.at("x")));
    out.f[b].push_back(out.x.back());
  }
  return out;
}

// ---- powers ----

namespace {

struct PowerRun {
  std::size_t rounds = 0;
  std::map<std::size_t, Decider> deciders;
  std::map<std::size_t, std::vector<Cover>> rows;
};

}  // namespace

P2CoverStrategy powers_to_omega_rothberger(const PowerFamily& sigma, std::size_t max_power) {
  P2CoverStrategy s;
  s.name = "powers_to_omega_rothberger";
  s.owner = game::Owner::P2;
  s.strength = game::Strength::Full;
  auto pf = combinatorics::build_pairing(combinatorics::RangeConstraint::empty());
  s.factory = [sigma, pf, max_power](std::uint64_t seed) -> Decider {
    auto st = std::make_shared<PowerRun>();
    auto round = [st, sigma, pf, max_power, seed](const Cover& u, std::size_t n, nlohmann::json* audit) {
      auto [m, k] = combinatorics::beta_inverse(*pf, n);
      if (m >= max_power) {
        throw Error(Errc::Unsupported, "round " + std::to_string(n) + " needs power " + std::to_string(m + 1) +
                                           " beyond the configured " + std::to_string(max_power));
      }
      SpacePtr power = power_of(u.space(), m);
      auto it = st->deciders.find(m);
      if (it == st->deciders.end()) it = st->deciders.emplace(m, narrowed(sigma(m, power), seed + m)).first;
      auto& row = st->rows[m];
      if (row.size() != k) throw Error(Errc::ConstraintViolation, "row " + std::to_string(m) + " is out of order");
      row.push_back(lift_to_power(u, m, power));
      std::size_t i = only(it->second(Window<Cover>{k, row}, nullptr), "power strategy " + std::to_string(m));
      if (audit) *audit = {{"n", n}, {"m", m}, {"k", k}, {"index", i}};
      ++st->rounds;
      return std::vector<std::size_t>{i};
    };
    return [st, round](const Window<Cover>& win, nlohmann::json* audit) {
      if (win.history.size() != win.round + 1) throw Error(Errc::Config, "full strategy needs the whole history");
      if (st->rounds != win.round) {
        st->rounds = 0;
        st->deciders.clear();
        st->rows.clear();
        for (std::size_t p = 0; p < win.round; ++p) round(win.history[p], p, nullptr);
      }
      return round(win.history.back(), win.round, audit);
    };
  };
  return s;
}

P2CoverStrategy markov_omega_menger_from_src(const PowerWitnesses& w, std::size_t max_power) {
  P2CoverStrategy s;
  s.name = "markov_omega_menger_from_src";
  s.owner = game::Owner::P2;
  s.strength = game::Strength::Markov;
  s.selection = game::SelectionMode::Finite;
  s.factory = [w, max_power](std::uint64_t) -> Decider {
    return [w, max_power](const Window<Cover>& win, nlohmann::json* audit) -> std::vector<std::size_t> {
      if (win.history.empty()) throw Error(Errc::Config, "no cover to answer");
      const Cover& u = win.history.back();
      const std::size_t n = win.round;
      std::vector<std::size_t> out;
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t j = 0; j <= n && j < max_power; ++j) {
        SpacePtr power = power_of(u.space(), j);
        Cover lifted = lift_to_power(u, j, power);
        // Drop members already inside a later one.
        std::vector<SetDesc> parts;
        for (std::size_t l = n + 1; l-- > 0;) {
          SetDesc a = w(j, l);
          bool inside = false;
          for (const auto& p : parts) {
            if (subset(*power, a, p)) {
              inside = true;
              break;
            }
          }
          if (!inside) parts.push_back(std::move(a));
        }
        SetDesc target = parts.size() == 1 ? parts.front() : set_union(parts);
        auto f = finite_subcover(lifted, target);
        if (!f) throw Error(Errc::SelectorFailure, "no finite subfamily covers " + to_string(target));
        out.insert(out.end(), f->begin(), f->end());
        rows.push_back({{"j", j}, {"picked", *f}});
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      if (audit) *audit = {{"n", n}, {"rows", rows}};
      return out;
    };
  };
  return s;
}

}  // namespace selgame::strategies
