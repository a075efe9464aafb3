#include "selgame/cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <utility>

#include "selgame/combinatorics/pairing.hpp"
#include "selgame/game/adversary.hpp"
#include "selgame/game/transcript_io.hpp"
#include "selgame/strategies/baire.hpp"
#include "selgame/strategies/chq.hpp"
#include "selgame/strategies/markov.hpp"
#include "selgame/strategies/omega.hpp"
#include "selgame/strategies/product.hpp"
#include "selgame/topology/cover_ops.hpp"
#include "selgame/topology/serialize.hpp"
#include "selgame/witnesses/witnesses.hpp"

namespace selgame::cli {

using namespace topology;
using namespace game;
using combinatorics::Nat;

namespace {

// One named check; keeps the first failure and how many cases it saw.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  bool expect(bool ok, const std::function<std::string()>& detail) {
    ++cases_;
    if (!ok && ok_) {
      ok_ = false;
      detail_ = detail();
    }
    return ok;
  }
  bool expect(bool ok, const std::string& detail) {
    return expect(ok, [&] { return detail; });
  }

  CheckResult result() const {
    return {name_, ok_ && cases_ > 0, ok_ ? (cases_ == 0 ? "no cases" : std::to_string(cases_) + " cases") : detail_};
  }

 private:
  std::string name_;
  bool ok_ = true;
  std::size_t cases_ = 0;
  std::string detail_;
};

class Sink {
 public:
  explicit Sink(SuiteResult& r) : r_(r) {}
  void add(const Tally& t) { push(t.result()); }
  void check(bool ok, std::string name, std::string detail = {}) { push({std::move(name), ok, std::move(detail)}); }

 private:
  void push(CheckResult c) {
    r_.ok = r_.ok && c.ok;
    r_.checks.push_back(std::move(c));
  }
  SuiteResult& r_;
};

Rational q(long long n, long long d = 1) { return Rational(n) / Rational(d); }

std::string seed_note(std::uint64_t seed, const Transcript& t) {
  std::string s = "seed " + std::to_string(seed);
  if (t.report.aborted) return s + " aborted: " + t.report.abort_reason;
  if (t.report.uncovered) return s + " uncovered " + to_string(*t.report.uncovered);
  return s;
}

GameSpec spec_for(const SpacePtr& s, CoverClass cls, std::size_t horizon, std::uint64_t seed,
                  SelectionMode sel = SelectionMode::Single) {
  GameSpec g;
  g.selection = sel;
  g.p1_class = cls;
  g.target = cls;
  g.space = s;
  g.horizon = horizon;
  g.seed = seed;
  return g;
}

P2CoverStrategy full_k(const SpacePtr& s, const std::string& w) {
  return strength_coercion(strategies::markov_from_cofinality(s->witness(w), CoverClass::K), Strength::Full);
}

// ---- 1: pairing ----

void bijective_below(Tally& t, const combinatorics::PairingFamily& pf, Nat limit) {
  using combinatorics::beta_star;
  std::map<Nat, std::pair<Nat, Nat>> table;
  std::set<Nat> rows_seen;
  Nat rows_needed = 0;
  for (Nat lambda = 0; beta_star(lambda, 0) < limit; ++lambda) rows_needed = lambda + 1;
  for (Nat n = 0; rows_seen.size() < rows_needed; ++n) {
    if (!t.expect(n < 200000, "row search ran past 200000")) return;
    Nat g = pf.gamma(n);
    if (beta_star(g, 0) < limit) rows_seen.insert(g);
    Nat prev = 0;
    for (Nat k = 0;; ++k) {
      Nat v = pf.beta(n, k);
      if (k > 0) t.expect(v > prev, [&] { return "row " + std::to_string(n) + " not increasing at " + std::to_string(k); });
      prev = v;
      if (v >= limit) break;
      t.expect(table.emplace(v, std::make_pair(n, k)).second, [&] { return "value " + std::to_string(v) + " hit twice"; });
    }
  }
  t.expect(table.size() == limit, [&] { return std::to_string(table.size()) + " values below " + std::to_string(limit); });
  for (Nat m = 0; m < limit; ++m) {
    auto nk = combinatorics::beta_inverse(pf, m);
    t.expect(pf.beta(nk.first, nk.second) == m && table.count(m) && table.at(m) == nk,
             [&] { return "inverse of " + std::to_string(m) + " does not round-trip"; });
  }
}

void suite_pairing(Sink& out, const SpaceRegistry&) {
  using combinatorics::RangeConstraint;
  auto empty = combinatorics::build_pairing(RangeConstraint::empty());
  auto split = combinatorics::build_pairing(RangeConstraint::split_minus_range());
  auto general = combinatorics::build_pairing(RangeConstraint::finseq_range());
  out.check(empty->gamma(0) == 0 && split->gamma(0) == 0 && general->gamma(0) == 0, "gamma_0 = 0");
  Tally a("empty constraint: bijective and row-increasing below 5000");
  bijective_below(a, *empty, 5000);
  out.add(a);
  Tally b("split constraint: bijective and row-increasing below 5000");
  bijective_below(b, *split, 5000);
  out.add(b);
  Tally anchor("range(s_n^-) below beta(n,0) for n <= 500");
  Tally anchor_general("range(s_n) below beta(n,0) for n <= 500");
  for (Nat n = 0; n <= 500; ++n) {
    for (Nat x : combinatorics::enum_split_pairs(n).minus) {
      anchor.expect(x < split->beta(n, 0), [&] { return "n = " + std::to_string(n); });
    }
    for (Nat x : combinatorics::enum_finseq(n)) {
      anchor_general.expect(x < general->beta(n, 0), [&] { return "n = " + std::to_string(n); });
    }
  }
  out.add(anchor);
  out.add(anchor_general);
}

// ---- 2: cover laws ----

bool inclusion_law(const std::set<CoverClass>& cs) {
  auto has = [&](CoverClass c) { return cs.count(c) != 0; };
  if (has(CoverClass::K) && !has(CoverClass::Omega)) return false;
  if (has(CoverClass::Omega) && !has(CoverClass::Lambda)) return false;
  if (has(CoverClass::Lambda) && !has(CoverClass::O)) return false;
  return !has(CoverClass::Gamma) || has(CoverClass::Omega);
}

std::string names(const std::set<CoverClass>& cs) {
  std::string s;
  for (auto c : cs) s += std::string(s.empty() ? "" : ",") + cover_class_name(c);
  return "{" + s + "}";
}

void suite_cover_laws(Sink& out, const SpaceRegistry& reg) {
  const std::vector<std::string> ids{"DiscreteN", "RealLineModel", "RealLine2", "RealLine3"};
  Tally omega("finite lists classified Omega contain the whole space");
  Tally incl("classification obeys K <= Omega <= Lambda <= O and Gamma <= Omega");
  Tally seen("some finite list is Omega and some is not");
  Tally closure("finite_union_closure answers every relatively compact challenge");
  Tally rect("rectangle_refine elements hold their challenge and sit in their parent");
  Tally cube("cube_refine elements hold their challenge and their cube sits in the parent");
  for (const auto& id : ids) {
    auto s = reg.get(id);
    std::vector<OpenDesc> pool{whole()};
    for (Nat k = 0; pool.size() < 6; ++k) {
      if (auto b = basis_at(*s, k)) pool.push_back(*b);
      if (k > 40) break;
    }
    bool any_omega = false, any_not = false;
    for (std::size_t mask = 1; mask < (std::size_t(1) << pool.size()); ++mask) {
      std::vector<OpenDesc> l;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (mask & (std::size_t(1) << i)) l.push_back(pool[i]);
      }
      auto cs = classify_cover(*s, l);
      incl.expect(inclusion_law(cs), [&] { return id + " list " + std::to_string(mask) + " got " + names(cs); });
      if (!cs.count(CoverClass::Omega)) {
        any_not = true;
        continue;
      }
      any_omega = true;
      bool has_whole = std::any_of(l.begin(), l.end(), [&](const OpenDesc& e) { return !point_outside(*s, e); });
      omega.expect(has_whole, [&] { return id + " list " + std::to_string(mask) + " is Omega without the whole space"; });
    }
    seen.expect(any_omega && any_not, id);

    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      Cover c = adversary_cover(s, CoverClass::O, seed);
      UnionClosure fin = finite_union_closure(c);
      for (const auto& k : s->batteries.relcompacts) {
        auto i = fin.cover.select(k);
        std::optional<OpenDesc> e;
        if (i) e = fin.cover.element(*i);
        OpenDesc joined;
        if (i) {
          for (std::size_t m : fin.members(*i)) joined = unite(joined, *c.element(m));
        }
        closure.expect(e && contains(*s, k, *e) && open_subset(*s, *e, joined),
                       [&] { return id + " seed " + std::to_string(seed) + " challenge " + to_string(k); });
      }
    }

    if (s->kind != SpaceKind::Product) continue;
    const std::size_t n = s->arity();
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      Cover c = adversary_cover(s, CoverClass::K, seed);
      Refinement r = rectangle_refine(c);
      for (const auto& k : s->batteries.compacts) {
        auto i = r.cover.select(k);
        std::optional<OpenDesc> e;
        std::optional<std::size_t> p;
        if (i) e = r.cover.element(*i);
        if (i) p = r.parent(*i);
        bool ok = e && p && e->atoms.size() == 1 && std::holds_alternative<atoms::Rectangle>(e->atoms[0]) &&
                  contains(*s, k, *e) && open_subset(*s, *e, *c.element(*p));
        rect.expect(ok, [&] { return id + " seed " + std::to_string(seed) + " challenge " + to_string(k); });
      }
      if (!s->power) continue;
      Refinement cr = cube_refine(r.cover);
      const auto& base = s->parts.front();
      for (const auto& k : base->batteries.compacts) {
        auto i = cr.cover.select(k);
        std::optional<OpenDesc> e;
        std::optional<std::size_t> p;
        if (i) e = cr.cover.element(*i);
        if (i) p = cr.parent(*i);
        bool ok = e && p && contains(*base, k, *e) &&
                  open_subset(*s, rectangle(std::vector<OpenDesc>(n, *e)), *r.cover.element(*p));
        cube.expect(ok, [&] { return id + " seed " + std::to_string(seed) + " challenge " + to_string(k); });
      }
    }
  }
  out.add(omega);
  out.add(incl);
  out.add(seen);
  out.add(closure);
  out.add(rect);
  out.add(cube);
}

// ---- 3: Markov strategies from witnesses ----

OpenDesc all_but(const PointId& x) {
  Rational v = *x.numeric();
  return unite(interval(std::nullopt, v), interval(v, std::nullopt));
}

void suite_markov_witness(Sink& out, const SpaceRegistry& reg) {
  for (auto [id, w] : {std::pair<std::string, std::string>{"DiscreteN", "initial_segments"}, {"RealLineModel", "balls"}}) {
    auto s = reg.get(id);
    auto sigma = strategies::markov_from_cofinality(s->witness(w), CoverClass::K);
    Tally t(id + " " + w + ": wins every battery judgment at horizon 32");
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto tr = run_game(spec_for(s, CoverClass::K, 32, seed), adversary_strategy(s, CoverClass::K), sigma);
      t.expect(!tr.report.aborted && tr.report.p2_wins, [&] { return seed_note(seed, tr); });
    }
    out.add(t);
  }

  // Balls centred at 1000 never reach [2000, 2001].
  {
    auto r = reg.get("RealLineModel");
    WitnessFamily shifted;
    shifted.kind = WitnessKind::Hemicompact;
    for (long long n = 0; n < 64; ++n) shifted.members.push_back(closed(q(1000 - n), q(1000 + n)));
    auto sigma = strategies::markov_from_cofinality(shifted, CoverClass::K);
    SetDesc bad = closed(q(2000), q(2001));
    strategies::CoverBuilder builder = [r](const PointId& x, std::size_t n) {
      return strategies::prepend(adversary_cover(r, CoverClass::K, 77 + n), all_but(x));
    };
    auto moves = strategies::markov_falsifier(sigma, bad, std::vector<PointId>(16, PointId::rat(q(4001, 2))), builder, 16);
    auto g = spec_for(r, CoverClass::K, 16, 0);
    g.battery = std::vector<SetDesc>{bad};
    auto tr = run_game(g, moves, sigma);
    out.check(!tr.report.aborted && !tr.report.p2_wins && tr.report.uncovered == bad,
              "falsifier defeats shifted balls and names [2000,2001]",
              tr.report.uncovered ? "uncovered " + to_string(*tr.report.uncovered) : seed_note(0, tr));
  }
  // {0..n} truncated at n = 7 never holds 20.
  {
    auto d = reg.get("DiscreteN");
    WitnessFamily cut = d->witness("initial_segments");
    cut.members.resize(8);
    auto sigma = strategies::markov_from_cofinality(cut, CoverClass::K);
    PointId x = PointId::nat(20);
    strategies::CoverBuilder builder = [d](const PointId& y, std::size_t n) {
      return strategies::prepend(adversary_cover(d, CoverClass::K, n), all_but(y));
    };
    auto moves = strategies::markov_falsifier(sigma, point_set(x), std::vector<PointId>(32, x), builder, 32);
    auto g = spec_for(d, CoverClass::K, 32, 0);
    g.battery = std::vector<SetDesc>{point_set(x)};
    auto tr = run_game(g, moves, sigma);
    out.check(!tr.report.aborted && !tr.report.p2_wins && tr.report.uncovered == point_set(x),
              "falsifier defeats truncated initial segments and names {20}", seed_note(0, tr));
  }
}

// ---- 4: product strategies ----

void expect_battery_wins(Tally& t, const SpacePtr& s, const P2CoverStrategy& sigma, SelectionMode sel) {
  t.expect(s->batteries.compacts.size() >= 40, s->id + " has fewer than 40 compacts");
  auto p1 = adversary_strategy(s, CoverClass::K);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto tr = run_game(spec_for(s, CoverClass::K, 64, seed, sel), p1, sigma);
    t.expect(!tr.report.aborted && tr.report.p2_wins, [&] { return s->id + " " + seed_note(seed, tr); });
  }
}

// X-projections of a K x {pt} transcript judged against X must agree with the product verdicts.
bool projection_law(const Transcript& t, const SpacePtr& x, std::string& why) {
  if (t.report.aborted) {
    why = t.report.abort_reason;
    return false;
  }
  Transcript tx = t;
  tx.spec.space = x;
  tx.spec.battery.reset();
  for (auto& rec : tx.rounds) {
    for (auto& e : rec.selected) e = project(e, 0);
  }
  Report rx = judge(tx, x->batteries.compacts, CoverClass::K);
  if (rx.verdicts.size() != t.report.verdicts.size()) {
    why = "battery sizes differ";
    return false;
  }
  for (std::size_t i = 0; i < rx.verdicts.size(); ++i) {
    if (rx.verdicts[i].round.has_value() != t.report.verdicts[i].round.has_value()) {
      why = "challenge " + to_string(rx.verdicts[i].challenge);
      return false;
    }
  }
  return rx.p2_wins == t.report.p2_wins;
}

void suite_product(Sink& out, const SpaceRegistry& reg) {
  using namespace strategies;
  auto r = reg.get("RealLineModel");
  auto d = reg.get("DiscreteN");
  {
    Tally t("product_k_rothberger wins on RealLine2 and DiscreteN2");
    expect_battery_wins(t, reg.get("RealLine2"), product_k_rothberger(full_k(r, "balls"), full_k(r, "balls")),
                        SelectionMode::Single);
    expect_battery_wins(t, reg.get("DiscreteN2"),
                        product_k_rothberger(full_k(d, "initial_segments"), full_k(d, "initial_segments")),
                        SelectionMode::Single);
    out.add(t);
  }
  {
    Tally t("product_k_menger wins on RealLine2 and DiscreteN2");
    expect_battery_wins(t, reg.get("RealLine2"),
                        product_k_menger(as_finite(full_k(r, "balls")), as_finite(full_k(r, "balls"))),
                        SelectionMode::Finite);
    expect_battery_wins(
        t, reg.get("DiscreteN2"),
        product_k_menger(as_finite(full_k(d, "initial_segments")), as_finite(full_k(d, "initial_segments"))),
        SelectionMode::Finite);
    out.add(t);
  }
  {
    Tally t("markov_product_k_rothberger wins on RealLine2Wide and DiscreteN2Wide");
    expect_battery_wins(t, reg.get("RealLine2Wide"), markov_product_k_rothberger(r->witness("balls"), r->witness("balls")),
                        SelectionMode::Single);
    expect_battery_wins(t, reg.get("DiscreteN2Wide"),
                        markov_product_k_rothberger(d->witness("initial_segments"), d->witness("initial_segments")),
                        SelectionMode::Single);
    out.add(t);
  }
  {
    Tally t("markov_product_k_menger wins on RealLine2Wide and DiscreteN2Wide");
    auto mr = as_finite(markov_from_cofinality(r->witness("balls"), CoverClass::K));
    auto md = as_finite(markov_from_cofinality(d->witness("initial_segments"), CoverClass::K));
    expect_battery_wins(t, reg.get("RealLine2Wide"), markov_product_k_menger(mr, mr), SelectionMode::Finite);
    expect_battery_wins(t, reg.get("DiscreteN2Wide"), markov_product_k_menger(md, md), SelectionMode::Finite);
    out.add(t);
  }
  {
    Tally t("one-point factor: projected verdicts match transcript for transcript");
    auto o = reg.get("OnePoint");
    auto rx = reg.get("RealLineXOnePoint");
    auto dx = reg.get("DiscreteNXOnePoint");
    auto roth = product_k_rothberger(full_k(r, "balls"), full_k(o, "point"));
    auto meng = product_k_menger(as_finite(full_k(d, "initial_segments")), as_finite(full_k(o, "point")));
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      std::string why;
      auto a = run_game(spec_for(rx, CoverClass::K, 64, seed), adversary_strategy(rx, CoverClass::K), roth);
      t.expect(projection_law(a, r, why), [&] { return "RealLineXOnePoint seed " + std::to_string(seed) + ": " + why; });
      auto b = run_game(spec_for(dx, CoverClass::K, 64, seed, SelectionMode::Finite),
                        adversary_strategy(dx, CoverClass::K), meng);
      t.expect(projection_law(b, d, why), [&] { return "DiscreteNXOnePoint seed " + std::to_string(seed) + ": " + why; });
    }
    out.add(t);
  }
}

// ---- 5: unfolding ----

// {0..k}^(m+1), k capped so each member has at most 64 points.
WitnessFamily grid_family(std::size_t m) {
  std::size_t cap = 1;
  for (;;) {
    std::size_t size = 1;
    for (std::size_t i = 0; i <= m; ++i) size *= cap + 1;
    if (size > 64) break;
    ++cap;
  }
  WitnessFamily w;
  w.kind = WitnessKind::Hemicompact;
  for (std::size_t k = 0; k < cap; ++k) {
    std::vector<PointId> pts;
    std::vector<Nat> idx(m + 1, 0);
    for (;;) {
      std::vector<PointId> cs;
      for (Nat v : idx) cs.push_back(PointId::nat(v));
      pts.push_back(m == 0 ? cs[0] : PointId::tuple(cs));
      std::size_t i = 0;
      for (; i <= m; ++i) {
        if (++idx[i] <= k) break;
        idx[i] = 0;
      }
      if (i > m) break;
    }
    w.members.push_back(points(std::move(pts)));
  }
  return w;
}

void suite_unfolding(Sink& out, const SpaceRegistry& reg) {
  using namespace strategies;
  auto d = reg.get("DiscreteN");
  {
    Tally sizes("DiscreteN finite-set battery has sizes <= 3");
    for (const auto& f : d->batteries.finite_sets) {
      sizes.expect(std::get<sets::Points>(f.v).points.size() <= 3, to_string(f));
    }
    out.add(sizes);
    PowerFamily grid = [](std::size_t m, const SpacePtr&) {
      return strength_coercion(markov_from_cofinality(grid_family(m), CoverClass::O), Strength::Full);
    };
    auto sigma = powers_to_omega_rothberger(grid);
    Tally t("powers_to_omega_rothberger covers the finite-set battery at horizon 64");
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto tr = run_game(spec_for(d, CoverClass::Omega, 64, seed), adversary_strategy(d, CoverClass::Omega), sigma);
      t.expect(!tr.report.aborted && tr.report.p2_wins, [&] { return seed_note(seed, tr); });
    }
    out.add(t);
  }
  {
    auto omega = strength_coercion(
        markov_from_cofinality(witness_from_pattern(WitnessKind::TopologicallyCountable, "naturals", 64), CoverClass::Omega),
        Strength::Full);
    GalvinExtractor g;
    g.core = [](const std::vector<Cover>& prefix) { return std::vector<PointId>{PointId::nat(prefix.size())}; };
    g.realize = [d](const std::vector<Cover>& prefix, const OpenDesc& target) -> std::optional<Cover> {
      return prepend(adversary_cover(d, CoverClass::Omega, 4242 + prefix.size()), target);
    };
    auto sigma = unfold_omega_to_open_rothberger(omega, g);
    Tally t("unfold_omega_to_open_rothberger covers the point battery");
    Tally m("UnfoldState: M_b = M_(b-1) + #F_b every round");
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto spec = spec_for(d, CoverClass::O, 64, seed);
      spec.audit = true;
      auto tr = run_game(spec, adversary_strategy(d, CoverClass::O), sigma);
      t.expect(!tr.report.aborted && tr.report.p2_wins, [&] { return seed_note(seed, tr); });
      std::vector<nlohmann::json> audits;
      for (const auto& rec : tr.rounds) audits.push_back(rec.audit.at("p2"));
      try {
        UnfoldState st = unfold_state_from_audit(audits);
        for (std::size_t b = 0; b < st.m.size(); ++b) {
          long long prev = b == 0 ? -1 : st.m[b - 1];
          m.expect(st.m[b] == prev + static_cast<long long>(st.f[b].size()),
                   [&] { return "seed " + std::to_string(seed) + " block " + std::to_string(b); });
        }
      } catch (const Error& e) {
        m.expect(false, e.what());
      }
    }
    out.add(t);
    out.add(m);
  }
}

// ---- 6: Baire ----

void suite_baire(Sink& out, const SpaceRegistry& reg) {
  auto b = reg.get("BaireModel");
  auto adv = strategies::baire_adversary(b, 4);
  Tally t("escape prefix avoids every selected cylinder (20 seeds, bound 4, horizon 64)");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto tr = run_game(spec_for(b, CoverClass::O, 64, seed, SelectionMode::Finite), adv.source,
                       strategies::random_bounded_selector(4));
    if (!t.expect(!tr.report.aborted, [&] { return seed_note(seed, tr); })) continue;
    Word f = adv.escape(tr);
    PointId x = PointId::word(f);
    t.expect(f.size() >= 64, "escape prefix shorter than the horizon");
    for (const auto& rec : tr.rounds) {
      for (const auto& e : rec.selected) {
        t.expect(!member(*b, x, e), [&] { return "seed " + std::to_string(seed) + " round " + std::to_string(rec.n); });
      }
    }
  }
  out.add(t);
  out.check(strategies::escape_word({{0}}, 1) == Word{1}, "always selecting [0] forces f(0) = 1");
}

// ---- 7: CHQ ----

void suite_chq(Sink& out, const SpaceRegistry& reg) {
  using namespace strategies;
  auto c = reg.get("CHQ");
  GameSpec g;
  g.p1_class = DualKind::CompactMove;
  g.target = CoverClass::K;
  g.space = c;
  g.horizon = 128;
  g.seed = 17;
  g.audit = true;
  auto t = run_dual_game(g, chq_p1_compact_open(), chq_naive_p2());
  out.check(!t.report.aborted && t.rounds.size() == 128, "compact-open replay runs 128 rounds", t.report.abort_reason);
  Tally book("K_n = [0,1] + {inf} + triangular prefix; K_0 <= K_n <= K_(n+1)");
  const SetDesc k0 = chq_k({}, 0);
  std::vector<std::vector<PointId>> a;
  std::optional<SetDesc> prev;
  for (const auto& rec : t.rounds) {
    SetDesc k = set_from_json(nlohmann::json::parse(rec.p1.dump()));
    bool ok = canonical_key(k) == canonical_key(chq_k(a, rec.n)) && subset(*c, k0, k) && (!prev || subset(*c, *prev, k));
    book.expect(ok, [&] { return "round " + std::to_string(rec.n); });
    prev = k;
    a.push_back(named_complement(rec.selected.at(0)));
  }
  out.add(book);
  out.check(t.report.p2_wins && !t.report.verdicts.empty(), "answers cover every shipped compact",
            t.report.uncovered ? to_string(*t.report.uncovered) : "");

  GameSpec f = g;
  f.p1_class = DualKind::FiniteSetMove;
  f.target.reset();
  auto tf = run_dual_game(f, chq_point_enumerator(c), chq_p2_finite_open());
  out.check(!tf.report.aborted && tf.rounds.size() == 128, "finite-open game runs 128 rounds", tf.report.abort_reason);
  auto ledger = chq_measure_ledger(tf);
  out.check(ledger.per_round_ok, "round n interval length below 2^-(n+2)");
  out.check(ledger.total_ok && ledger.total * 2 < 1, "cumulative interval length below 1/2", to_string(ledger.total));
  bool exhibited = false;
  std::string detail = "no point exhibited";
  if (tf.report.exhibited) {
    detail = to_string(*tf.report.exhibited);
    auto ip = tf.report.exhibited->injected();
    auto x = ip && ip->summand == 0 ? ip->point->numeric() : std::nullopt;
    exhibited = x && *x >= 0 && *x <= 1;
    for (const auto& rec : tf.rounds) exhibited = exhibited && !member(*c, *tf.report.exhibited, rec.selected.at(0));
  }
  out.check(exhibited, "judge exhibits an uncovered rational in [0,1]", detail);
}

// ---- 8: witness chain ----

void suite_witness_chain(Sink& out, const SpaceRegistry& reg) {
  using namespace witnesses;
  Tally chain("implication_chain outputs validate on RealLineModel and DiscreteN");
  Tally collapse("regular_collapse outputs validate and contain the originals");
  for (const char* id : {"RealLineModel", "DiscreteN"}) {
    auto s = reg.get(id);
    for (const auto& [name, w0] : s->witnesses) {
      auto v0 = validate_family(*s, w0);
      chain.expect(v0.ok, std::string(id) + "/" + name + ": " + v0.detail);
      WitnessFamily w = w0;
      for (int step = 0; step < 4; ++step) {
        try {
          w = implication_chain(*s, w);
        } catch (const Error& e) {
          chain.expect(e.code() == Errc::Unsupported, e.what());
          break;
        }
        auto v = validate_family(*s, w);
        chain.expect(v.ok, std::string(id) + "/" + name + ": " + v.detail);
      }
      if (w0.kind != WitnessKind::Hemicompact && w0.kind != WitnessKind::RelativelyHemicompact) continue;
      try {
        auto once = regular_collapse(*s, w0);
        auto twice = regular_collapse(*s, once);
        bool ok = twice.kind == w0.kind || w0.kind == WitnessKind::RelativelyHemicompact;
        if (w0.kind == WitnessKind::Hemicompact) {
          for (std::size_t n = 0; n < w0.size(); ++n) ok = ok && subset(*s, w0.members[n], twice.members[n]);
        }
        collapse.expect(ok && validate_family(*s, once).ok && validate_family(*s, twice).ok, std::string(id) + "/" + name);
      } catch (const Error& e) {
        collapse.expect(false, std::string(id) + "/" + name + ": " + e.what());
      }
    }
  }
  out.add(chain);
  out.add(collapse);

  Tally agree("cof and cof-hat verdicts agree on T1 models");
  for (const auto& id : reg.ids()) {
    auto s = reg.get(id);
    if (!s->flags.t1) continue;
    std::vector<SetDesc> pts;
    for (const auto& p : s->batteries.points) pts.push_back(point_set(p));
    for (const auto& [name, w] : s->witnesses) {
      for (const std::vector<SetDesc>* b : {&s->batteries.finite_sets, &s->batteries.compacts, &std::as_const(pts)}) {
        if (b->empty()) continue;
        auto plain = check_cofinality(*s, w, *b, CofMode::Cof, w.size());
        auto hat = check_cofinality(*s, w, *b, CofMode::CofHat, w.size());
        bool same = plain.ok() == hat.ok() && (!plain.ok() || plain.claim->witness == hat.claim->witness);
        agree.expect(same, id + "/" + name);
      }
    }
  }
  out.add(agree);

  auto ro = reg.get("RightOrderModel");
  const auto& ints = ro->witness("integers");
  std::vector<SetDesc> battery;
  for (const auto& p : ro->batteries.points) battery.push_back(point_set(p));
  auto res = check_cofinality(*ro, ints, battery, CofMode::CofHat, ints.size());
  Tally right("RightOrderModel integers serve the 100-point battery via cof-hat");
  right.expect(battery.size() == 100, std::to_string(battery.size()) + " points");
  right.expect(res.ok(), res.counterexample ? to_string(*res.counterexample) : "");
  if (res.ok()) {
    for (std::size_t i = 0; i < battery.size(); ++i) {
      Rational x = *ro->batteries.points[i].numeric();
      std::size_t n = 0;
      while (*std::get<sets::Points>(ints.at(n).v).points[0].numeric() > x) ++n;
      right.expect(res.claim->witness[i] == n, to_string(ro->batteries.points[i]));
    }
  }
  out.add(right);
}

// ---- 9: engine ----

void suite_engine(Sink& out, const SpaceRegistry& reg) {
  auto d = reg.get("DiscreteN");
  auto r = reg.get("RealLineModel");
  auto segs = strategies::markov_from_cofinality(d->witness("initial_segments"), CoverClass::K);

  Tally det("repeated seeds give byte-identical transcripts");
  for (std::uint64_t seed : {0u, 5u, 41u}) {
    auto g = spec_for(d, CoverClass::K, 32, seed);
    g.audit = true;
    det.expect(to_jsonl(run_game(g, adversary_strategy(d, CoverClass::K), segs)) ==
                   to_jsonl(run_game(g, adversary_strategy(d, CoverClass::K), segs)),
               "DiscreteN seed " + std::to_string(seed));
  }
  {
    auto p = reg.get("RealLine2");
    auto sigma = strategies::product_k_rothberger(full_k(r, "balls"), full_k(r, "balls"));
    auto g = spec_for(p, CoverClass::K, 16, 3);
    g.audit = true;
    det.expect(to_jsonl(run_game(g, adversary_strategy(p, CoverClass::K), sigma)) ==
                   to_jsonl(run_game(g, adversary_strategy(p, CoverClass::K), sigma)),
               "RealLine2 product");
    GameSpec dual;
    dual.p1_class = DualKind::CompactMove;
    dual.target = CoverClass::K;
    dual.space = reg.get("CHQ");
    dual.horizon = 24;
    dual.audit = true;
    det.expect(to_jsonl(run_dual_game(dual, strategies::chq_p1_compact_open(), strategies::chq_naive_p2())) ==
                   to_jsonl(run_dual_game(dual, strategies::chq_p1_compact_open(), strategies::chq_naive_p2())),
               "CHQ dual");
  }
  out.add(det);

  Tally tamper("tampering outside Markov/Predetermined windows never changes a move");
  std::size_t touched = 0;
  auto scramble = [&touched, d](Window<Cover>& w) {
    for (std::size_t i = 0; i + 1 < w.history.size(); ++i) {
      w.history[i] = adversary_cover(d, CoverClass::K, 9000 + i);
      ++touched;
    }
  };
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    auto g = spec_for(d, CoverClass::K, 24, seed);
    g.audit = true;
    auto base = to_jsonl(run_game(g, adversary_strategy(d, CoverClass::K), segs));
    RunOptions o2;
    o2.tamper_p2 = scramble;
    tamper.expect(to_jsonl(run_game(g, adversary_strategy(d, CoverClass::K), segs, o2)) == base,
                  "Markov P2 seed " + std::to_string(seed));
    tamper.expect(to_jsonl(run_game(g, adversary_strategy(d, CoverClass::K), strength_coercion(segs, Strength::Full),
                                    o2)) == base,
                  "Markov P2 coerced to Full, seed " + std::to_string(seed));
    RunOptions o1;
    o1.tamper_p1 = [&touched](Window<Selected>& w) {
      for (auto& s : w.history) {
        s = Selected{{12345}, {whole()}};
        ++touched;
      }
    };
    tamper.expect(to_jsonl(run_game(g, adversary_strategy(d, CoverClass::K), segs, o1)) == base,
                  "Predetermined P1 seed " + std::to_string(seed));
  }
  out.add(tamper);
  out.check(touched > 0, "tamper hooks ran", std::to_string(touched) + " history entries rewritten");

  // The same hook must reach a strategy that reads old covers.
  {
    P2CoverStrategy reader;
    reader.name = "first-cover-reader";
    reader.factory = [](std::uint64_t) {
      return [](const Window<Cover>& w, nlohmann::json*) -> std::vector<std::size_t> {
        return {std::hash<std::string>{}(w.history.front().name()) % 5};
      };
    };
    auto g = spec_for(d, CoverClass::O, 6, 0);
    g.check_p1 = false;
    auto base = run_game(g, adversary_strategy(d, CoverClass::O), reader);
    RunOptions o;
    o.tamper_p2 = [d](Window<Cover>& w) {
      if (w.history.size() > 1) w.history[0] = adversary_cover(d, CoverClass::O, 1).renamed("tampered");
    };
    auto t = run_game(g, adversary_strategy(d, CoverClass::O), reader, o);
    bool differs = false;
    for (std::size_t i = 1; i < t.rounds.size() && i < base.rounds.size(); ++i) {
      differs = differs || t.rounds[i].indices != base.rounds[i].indices;
    }
    out.check(differs, "control: tampering is visible to a Full strategy");
  }

  Tally rt("JSONL round trip reproduces judge verdicts");
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    auto g = spec_for(d, CoverClass::K, 20, seed);
    g.audit = true;
    auto t = run_game(g, adversary_strategy(d, CoverClass::K), segs);
    std::string text = to_jsonl(t);
    auto back = parse_jsonl(text, [&reg](const std::string& id) { return reg.get(id); });
    back.report = judge(back);
    rt.expect(report_to_json(back.report).dump() == report_to_json(t.report).dump() && to_jsonl(back) == text,
              "seed " + std::to_string(seed));
  }
  out.add(rt);

  Tally mono("single-selection wins imply finite-selection wins");
  auto balls = strategies::markov_from_cofinality(r->witness("balls"), CoverClass::K);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto single = run_game(spec_for(r, CoverClass::K, 16, seed), adversary_strategy(r, CoverClass::K), balls);
    auto finite = run_game(spec_for(r, CoverClass::K, 16, seed, SelectionMode::Finite),
                           adversary_strategy(r, CoverClass::K), as_finite(balls));
    mono.expect(!single.report.p2_wins || finite.report.p2_wins, "seed " + std::to_string(seed));
  }
  out.add(mono);
}

using SuiteFn = void (*)(Sink&, const SpaceRegistry&);

const std::map<std::string, SuiteFn>& suite_fns() {
  static const std::map<std::string, SuiteFn> fns{
      {"pairing", suite_pairing},       {"cover-laws", suite_cover_laws}, {"markov-witness", suite_markov_witness},
      {"product", suite_product},       {"unfolding", suite_unfolding},   {"baire", suite_baire},
      {"chq", suite_chq},               {"witness-chain", suite_witness_chain}, {"engine", suite_engine},
  };
  return fns;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> all{
      {"pairing", 1, "pairing bijections, row monotonicity, anchor property", 1},
      {"cover-laws", 2, "classification laws, union closure, rectangle and cube refinement", 5},
      {"markov-witness", 3, "Markov strategies from witness families and their falsifier", 2},
      {"product", 4, "strategic and Markov product strategies, one-point projection law", 20},
      {"unfolding", 5, "powers and unfolding constructions for omega-covers", 5},
      {"baire", 6, "Baire space adversary and escape prefix", 2},
      {"chq", 7, "[0,1] + Fortissimo example in both dual games", 3},
      {"witness-chain", 8, "witness implications, regular collapse, cof vs cof-hat", 2},
      {"engine", 9, "determinism, strategy windows, transcript round trip", 2},
  };
  return all;
}

SuiteResult run_suite(const std::string& name, const SpaceRegistry& reg) {
  auto it = suite_fns().find(name);
  if (it == suite_fns().end()) throw Error(Errc::Config, "unknown suite '" + name + "'");
  SuiteResult r;
  r.suite = name;
  double budget = 0;
  for (const auto& s : suites()) {
    if (s.name != name) continue;
    r.criterion = s.criterion;
    budget = s.budget_seconds;
  }
  Sink sink(r);
  auto start = std::chrono::steady_clock::now();
  try {
    it->second(sink, reg);
  } catch (const std::exception& e) {
    sink.check(false, "suite completed", e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char note[64];
  std::snprintf(note, sizeof note, "%.2fs of %.0fs", r.seconds, budget);
  sink.check(r.seconds <= budget, "runtime within budget", note);
  return r;
}

nlohmann::ordered_json to_json(const SuiteResult& r) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return {{"suite", r.suite}, {"criterion", r.criterion}, {"ok", r.ok}, {"seconds", r.seconds}, {"checks", checks}};
}

}  // namespace selgame::cli
