#include <gtest/gtest.h>

#include <map>

#include "fixtures.hpp"
#include "selgame/combinatorics/pairing.hpp"
#include "selgame/combinatorics/sequences.hpp"
#include "selgame/strategies/baire.hpp"
#include "selgame/strategies/chq.hpp"
#include "selgame/strategies/markov.hpp"
#include "selgame/strategies/omega.hpp"
#include "selgame/strategies/product.hpp"
#include "selgame/topology/serialize.hpp"

using namespace selgame;
using namespace selgame::game;
using namespace selgame::strategies;
using namespace selgame::topology;
using fixtures::space;

namespace {

Rational q(long long n, long long d = 1) { return Rational(n) / Rational(d); }

OpenDesc all_but(const PointId& x) {
  Rational v = *x.numeric();
  return unite(interval(std::nullopt, v), interval(v, std::nullopt));
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

WitnessFamily shifted_balls(long long shift, std::size_t count) {
  WitnessFamily w;
  w.kind = WitnessKind::Hemicompact;
  for (std::size_t n = 0; n < count; ++n) {
    long long r = static_cast<long long>(n);
    w.members.push_back(closed(q(shift - r), q(shift + r)));
  }
  return w;
}

}  // namespace

// ---- markov_from_cofinality and its falsifier ----

TEST(MarkovFromCofinality, DiscreteSegmentsWinAtHorizon32) {
  auto d = space("DiscreteN");
  auto sigma = markov_from_cofinality(d->witness("initial_segments"), CoverClass::K);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto t = run_game(spec_for(d, CoverClass::K, 32, seed), adversary_strategy(d, CoverClass::K), sigma);
    ASSERT_FALSE(t.report.aborted) << t.report.abort_reason;
    EXPECT_TRUE(t.report.p2_wins) << "seed " << seed;
  }
}

TEST(MarkovFromCofinality, RealBallsWinAtHorizon32) {
  auto r = space("RealLineModel");
  auto sigma = markov_from_cofinality(r->witness("balls"), CoverClass::K);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto t = run_game(spec_for(r, CoverClass::K, 32, seed), adversary_strategy(r, CoverClass::K), sigma);
    ASSERT_FALSE(t.report.aborted) << t.report.abort_reason;
    EXPECT_TRUE(t.report.p2_wins) << "seed " << seed;
  }
}

TEST(MarkovFromCofinality, SelectedElementContainsWitness) {
  auto r = space("RealLineModel");
  auto sigma = markov_from_cofinality(r->witness("balls"), CoverClass::K);
  auto g = spec_for(r, CoverClass::K, 12, 4);
  g.audit = true;
  auto t = run_game(g, adversary_strategy(r, CoverClass::K), sigma);
  for (const auto& rec : t.rounds) {
    long long n = static_cast<long long>(rec.n);
    EXPECT_TRUE(contains(*r, closed(q(-n), q(n)), rec.selected.at(0))) << "round " << rec.n;
  }
}

TEST(MarkovFromCofinality, OnePointAlwaysCoversThePoint) {
  auto o = space("OnePoint");
  auto sigma = markov_from_cofinality(o->witness("point"), CoverClass::O);
  auto t = run_game(spec_for(o, CoverClass::O, 5, 1), adversary_strategy(o, CoverClass::O), sigma);
  ASSERT_FALSE(t.report.aborted) << t.report.abort_reason;
  for (const auto& rec : t.rounds) EXPECT_TRUE(member(*o, o->batteries.points[0], rec.selected[0]));
  EXPECT_TRUE(t.report.p2_wins);
}

TEST(MarkovFalsifier, ShiftedBallsMissFarInterval) {
  auto r = space("RealLineModel");
  auto sigma = markov_from_cofinality(shifted_balls(1000, 64), CoverClass::K);
  SetDesc bad = closed(q(2000), q(2001));
  std::vector<PointId> xs(16, PointId::rat(q(4001, 2)));
  CoverBuilder builder = [r](const PointId& x, std::size_t n) {
    return prepend(adversary_cover(r, CoverClass::K, 77 + n), all_but(x));
  };
  auto moves = markov_falsifier(sigma, bad, xs, builder, 16);
  auto g = spec_for(r, CoverClass::K, 16, 0);
  g.battery = std::vector<SetDesc>{bad};
  auto t = run_game(g, moves, sigma);
  ASSERT_FALSE(t.report.aborted) << t.report.abort_reason;
  EXPECT_FALSE(t.report.p2_wins);
  ASSERT_TRUE(t.report.uncovered);
  EXPECT_EQ(*t.report.uncovered, bad);
}

TEST(MarkovFalsifier, DiscreteSegmentsMissPointPastHorizon) {
  auto d = space("DiscreteN");
  auto sigma = markov_from_cofinality(d->witness("initial_segments"), CoverClass::K);
  const std::size_t horizon = 20;
  PointId x = PointId::nat(horizon + 1);
  CoverBuilder builder = [d](const PointId& y, std::size_t n) {
    return prepend(adversary_cover(d, CoverClass::K, n), all_but(y));
  };
  auto moves = markov_falsifier(sigma, point_set(x), std::vector<PointId>(horizon, x), builder, horizon);
  auto g = spec_for(d, CoverClass::K, horizon, 0);
  g.battery = std::vector<SetDesc>{point_set(x)};
  auto t = run_game(g, moves, sigma);
  EXPECT_FALSE(t.report.p2_wins);
  EXPECT_EQ(*t.report.uncovered, point_set(x));
}

TEST(MarkovFalsifier, StrategyThatKeepsThePointCannotBeDefeated) {
  auto d = space("DiscreteN");
  PointId x = PointId::nat(3);
  WitnessFamily w;
  w.kind = WitnessKind::Hemicompact;
  w.members = {point_set(x)};
  auto sigma = markov_from_cofinality(w, CoverClass::K);
  CoverBuilder builder = [d](const PointId& y, std::size_t n) {
    return prepend(adversary_cover(d, CoverClass::K, n), all_but(y));
  };
  try {
    markov_falsifier(sigma, point_set(x), {x, x}, builder, 2);
    FAIL() << "expected Unsupported";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Unsupported);
  }
}

TEST(MarkovFalsifier, RejectsFullStrategies) {
  auto d = space("DiscreteN");
  auto sigma = strength_coercion(markov_from_cofinality(d->witness("initial_segments"), CoverClass::K), Strength::Full);
  CoverBuilder builder = [d](const PointId&, std::size_t n) { return adversary_cover(d, CoverClass::K, n); };
  EXPECT_THROW(markov_falsifier(sigma, point_set(PointId::nat(1)), {PointId::nat(1)}, builder, 1), Error);
}

// ---- defeating covers ----

TEST(GalvinDefeatingCover, DiscreteFiniteSets) {
  auto d = space("DiscreteN");
  std::vector<SetDesc> battery{points({PointId::nat(0)}), points({PointId::nat(1), PointId::nat(2)}),
                               points({PointId::nat(0), PointId::nat(3), PointId::nat(4)})};
  ChoiceTable table;
  for (std::uint64_t s = 0; s < 3; ++s) table.family.push_back(adversary_cover(d, CoverClass::Omega, s));
  table.phi = [](const Cover& c) { return *c.element(0); };
  NeighbourhoodSource nb = [](const SetDesc& a) {
    std::vector<OpenDesc> out;
    for (Nat extra = 500; extra < 504; ++extra) {
      OpenDesc u = singleton(PointId::nat(extra));
      for (const auto& p : std::get<sets::Points>(a.v).points) u = unite(u, singleton(p));
      out.push_back(u);
    }
    return out;
  };
  auto res = galvin_defeating_cover(d, CoverClass::Omega, table, battery, nb);
  ASSERT_EQ(res.chosen.size(), battery.size());
  for (std::size_t i = 0; i < battery.size(); ++i) EXPECT_TRUE(contains(*d, battery[i], res.chosen[i]));
  for (const auto& c : table.family) {
    OpenDesc v = table.phi(c);
    for (std::size_t i = 0; i < battery.size(); ++i) {
      auto e = *res.cover.element(i);
      EXPECT_FALSE(open_subset(*d, v, e) && open_subset(*d, e, v));
    }
  }
}

TEST(GalvinDefeatingCover, FullRangeLeavesNoWitness) {
  auto d = space("DiscreteN");
  ChoiceTable table{{adversary_cover(d, CoverClass::O, 0)}, [](const Cover&) { return singleton(PointId::nat(0)); }};
  NeighbourhoodSource nb = [](const SetDesc&) { return std::vector<OpenDesc>{singleton(PointId::nat(0))}; };
  try {
    galvin_defeating_cover(d, CoverClass::O, table, {point_set(PointId::nat(0))}, nb);
    FAIL() << "expected MissingWitness";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MissingWitness);
  }
}

TEST(GalvinDefeatingCover, RealConstantChoiceTenIntervals) {
  auto r = space("RealLineModel");
  std::vector<SetDesc> battery;
  for (long long i = 0; i < 10; ++i) battery.push_back(closed(q(i), q(i + 1)));
  ChoiceTable table{{adversary_cover(r, CoverClass::K, 3)}, [](const Cover&) { return interval(q(-1), q(12)); }};
  NeighbourhoodSource nb = [](const SetDesc& a) {
    const auto& c = std::get<sets::Closed>(a.v);
    return std::vector<OpenDesc>{interval(c.lo - q(1, 2), c.hi + q(1, 2))};
  };
  auto res = galvin_defeating_cover(r, CoverClass::K, table, battery, nb);
  ASSERT_EQ(res.cover.size(), std::optional<std::size_t>(10));
  for (std::size_t i = 0; i < battery.size(); ++i) {
    auto j = res.cover.select(battery[i]);
    ASSERT_TRUE(j);
    EXPECT_TRUE(contains(*r, battery[i], *res.cover.element(*j)));
  }
}

// ---- product strategies: bookkeeping and the one-point projection law ----

namespace {

P2CoverStrategy full_k(const SpacePtr& s, const std::string& w) {
  return strength_coercion(markov_from_cofinality(s->witness(w), CoverClass::K), Strength::Full);
}

// Judges the X-projections of a product transcript against X's compacts and
// checks each verdict matches the product verdict on K x {pt}.
void expect_projection_law(const Transcript& t, const SpacePtr& x) {
  ASSERT_FALSE(t.report.aborted) << t.report.abort_reason;
  Transcript tx = t;
  tx.spec.space = x;
  tx.spec.battery.reset();
  for (auto& rec : tx.rounds) {
    for (auto& e : rec.selected) {
      e = project(e, 0);
      EXPECT_FALSE(e.is_empty());
    }
  }
  Report rx = judge(tx, x->batteries.compacts, CoverClass::K);
  ASSERT_EQ(rx.verdicts.size(), t.report.verdicts.size());
  for (std::size_t i = 0; i < rx.verdicts.size(); ++i) {
    EXPECT_EQ(rx.verdicts[i].round.has_value(), t.report.verdicts[i].round.has_value()) << "challenge " << i;
  }
  EXPECT_EQ(rx.p2_wins, t.report.p2_wins);
}

}  // namespace

TEST(ProductProjection, RothbergerWithOnePointFactor) {
  auto r = space("RealLineModel");
  auto o = space("OnePoint");
  auto p = space("RealLineXOnePoint");
  auto sigma = product_k_rothberger(full_k(r, "balls"), full_k(o, "point"));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto t = run_game(fixtures::k_game(p, 64, seed), adversary_strategy(p, CoverClass::K), sigma);
    EXPECT_TRUE(t.report.p2_wins);
    expect_projection_law(t, r);
  }
}

TEST(ProductProjection, MengerWithOnePointFactor) {
  auto d = space("DiscreteN");
  auto o = space("OnePoint");
  auto p = space("DiscreteNXOnePoint");
  auto sigma = product_k_menger(as_finite(full_k(d, "initial_segments")), as_finite(full_k(o, "point")));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto t = run_game(fixtures::k_game(p, 64, seed, SelectionMode::Finite), adversary_strategy(p, CoverClass::K),
                      sigma);
    EXPECT_TRUE(t.report.p2_wins);
    expect_projection_law(t, d);
  }
}

TEST(ProductProjection, MarkovRothbergerWithOnePointFactor) {
  auto r = space("RealLineModel");
  auto o = space("OnePoint");
  auto p = space("RealLineXOnePoint");
  auto sigma = markov_product_k_rothberger(r->witness("balls"), o->witness("point"));
  // Cantor order reaches ball 32 only after 32*33/2 rounds.
  auto t = run_game(fixtures::k_game(p, 528, 2), adversary_strategy(p, CoverClass::K), sigma);
  EXPECT_TRUE(t.report.p2_wins);
  expect_projection_law(t, r);
}

TEST(ProductBookkeeping, RothbergerRangeInvariantEveryRound) {
  auto r = space("RealLineModel");
  auto s2 = space("RealLine2");
  auto g = fixtures::k_game(s2, 64, 9);
  g.audit = true;
  auto t = run_game(g, adversary_strategy(s2, CoverClass::K), product_k_rothberger(full_k(r, "balls"), full_k(r, "balls")));
  ASSERT_EQ(t.rounds.size(), 64u);
  auto pf = combinatorics::build_pairing(combinatorics::RangeConstraint::finseq_range());
  for (const auto& rec : t.rounds) {
    const auto& a = rec.audit.at("p2");
    auto [j, k] = combinatorics::beta_inverse(*pf, rec.n);
    EXPECT_EQ(a.at("j").get<std::size_t>(), j);
    EXPECT_EQ(a.at("k").get<std::size_t>(), k);
    EXPECT_TRUE(a.at("range_ok").get<bool>()) << "round " << rec.n;
    for (const auto& v : a.at("s")) EXPECT_LE(v.get<Nat>(), rec.n);
  }
}

TEST(ProductBookkeeping, MengerRangeInvariantEveryRound) {
  auto d = space("DiscreteN");
  auto s2 = space("DiscreteN2");
  auto g = fixtures::k_game(s2, 64, 5, SelectionMode::Finite);
  g.audit = true;
  auto sigma = product_k_menger(as_finite(full_k(d, "initial_segments")), as_finite(full_k(d, "initial_segments")));
  auto t = run_game(g, adversary_strategy(s2, CoverClass::K), sigma);
  ASSERT_EQ(t.rounds.size(), 64u);
  for (const auto& rec : t.rounds) {
    const auto& a = rec.audit.at("p2");
    EXPECT_TRUE(a.at("range_ok").get<bool>()) << "round " << rec.n;
    for (const auto& v : a.at("s_minus")) EXPECT_LE(v.get<Nat>(), rec.n);
    EXPECT_FALSE(rec.indices.empty());
  }
}

TEST(ProductBookkeeping, MarkovMengerIgnoresEarlierHistory) {
  auto r = space("RealLineModel");
  auto s2 = space("RealLine2Wide");
  auto m = as_finite(markov_from_cofinality(r->witness("balls"), CoverClass::K));
  auto sigma = markov_product_k_menger(m, m);
  auto g = fixtures::k_game(s2, 24, 6, SelectionMode::Finite);
  auto base = run_game(g, adversary_strategy(s2, CoverClass::K), sigma);
  RunOptions opts;
  opts.tamper_p2 = [s2](Window<Cover>& w) {
    for (std::size_t i = 0; i + 1 < w.history.size(); ++i) w.history[i] = adversary_cover(s2, CoverClass::K, 999 + i);
  };
  auto tampered = run_game(g, adversary_strategy(s2, CoverClass::K), sigma, opts);
  ASSERT_EQ(base.rounds.size(), tampered.rounds.size());
  for (std::size_t i = 0; i < base.rounds.size(); ++i) EXPECT_EQ(base.rounds[i].indices, tampered.rounds[i].indices);
}

// ---- unfolding and powers ----

namespace {

// ω-strategy answering round b with the element the cover selects for {b}.
P2CoverStrategy nat_omega_strategy() {
  WitnessFamily w = witness_from_pattern(WitnessKind::TopologicallyCountable, "naturals", 64);
  return strength_coercion(markov_from_cofinality(w, CoverClass::Omega), Strength::Full);
}

GalvinExtractor nat_extractor(const SpacePtr& d) {
  GalvinExtractor g;
  g.core = [](const std::vector<Cover>& prefix) { return std::vector<PointId>{PointId::nat(prefix.size())}; };
  g.realize = [d](const std::vector<Cover>& prefix, const OpenDesc& target) -> std::optional<Cover> {
    return prepend(adversary_cover(d, CoverClass::Omega, 4242 + prefix.size()), target);
  };
  return g;
}

}  // namespace

TEST(Unfold, DiscretePointBatteryCovered) {
  auto d = space("DiscreteN");
  auto sigma = unfold_omega_to_open_rothberger(nat_omega_strategy(), nat_extractor(d));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto g = spec_for(d, CoverClass::O, 64, seed);
    g.audit = true;
    auto t = run_game(g, adversary_strategy(d, CoverClass::O), sigma);
    ASSERT_FALSE(t.report.aborted) << t.report.abort_reason;
    EXPECT_TRUE(t.report.p2_wins);
    std::vector<nlohmann::json> audits;
    for (const auto& rec : t.rounds) audits.push_back(rec.audit.at("p2"));
    UnfoldState st = unfold_state_from_audit(audits);
    EXPECT_EQ(st.x.size(), 64u);
    for (std::size_t b = 0; b < st.m.size(); ++b) {
      long long prev = b == 0 ? -1 : st.m[b - 1];
      EXPECT_EQ(st.m[b], prev + static_cast<long long>(st.f[b].size()));
    }
  }
}

TEST(Unfold, BlocksWithSeveralPoints) {
  auto d = space("DiscreteN");
  GalvinExtractor g = nat_extractor(d);
  // Block b enumerates {b, b + 100, b + 200}; σ0 still needs {b} inside the answer.
  g.core = [](const std::vector<Cover>& prefix) {
    Nat b = prefix.size();
    return std::vector<PointId>{PointId::nat(b), PointId::nat(b + 100), PointId::nat(b + 200)};
  };
  auto spec = spec_for(d, CoverClass::O, 30, 1);
  spec.audit = true;
  auto t = run_game(spec, adversary_strategy(d, CoverClass::O), unfold_omega_to_open_rothberger(nat_omega_strategy(), g));
  ASSERT_FALSE(t.report.aborted) << t.report.abort_reason;
  std::vector<nlohmann::json> audits;
  for (const auto& rec : t.rounds) audits.push_back(rec.audit.at("p2"));
  UnfoldState st = unfold_state_from_audit(audits);
  ASSERT_EQ(st.m.size(), 10u);
  for (std::size_t b = 0; b < st.m.size(); ++b) EXPECT_EQ(st.m[b], static_cast<long long>(3 * b + 2));
}

TEST(Unfold, AuditArithmeticViolationDetected) {
  std::vector<nlohmann::json> audits{{{"t", 0}, {"block", 0}, {"M", 1}, {"M_prev", -1}, {"F_size", 1}, {"x", to_json(PointId::nat(0))}}};
  EXPECT_THROW(unfold_state_from_audit(audits), Error);
}

TEST(Unfold, OnePointSingleBlock) {
  auto o = space("OnePoint");
  GalvinExtractor g;
  PointId pt = o->batteries.points[0];
  g.core = [pt](const std::vector<Cover>&) { return std::vector<PointId>{pt}; };
  g.realize = [o](const std::vector<Cover>& prefix, const OpenDesc& target) -> std::optional<Cover> {
    return prepend(adversary_cover(o, CoverClass::Omega, prefix.size()), target);
  };
  WitnessFamily w = o->witness("point");
  auto s0 = strength_coercion(markov_from_cofinality(w, CoverClass::Omega), Strength::Full);
  auto spec = spec_for(o, CoverClass::O, 1, 0);
  auto t = run_game(spec, adversary_strategy(o, CoverClass::O), unfold_omega_to_open_rothberger(s0, g));
  ASSERT_FALSE(t.report.aborted) << t.report.abort_reason;
  EXPECT_EQ(t.rounds.size(), 1u);
  EXPECT_TRUE(t.report.p2_wins);
}

namespace {

// {0..k}^(m+1), with k capped so each member has at most 64 points.
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

PowerFamily grid_powers() {
  return [](std::size_t m, const SpacePtr&) {
    return strength_coercion(markov_from_cofinality(grid_family(m), CoverClass::O), Strength::Full);
  };
}

}  // namespace

TEST(Powers, DiscreteFiniteSetsCovered) {
  auto d = space("DiscreteN");
  auto sigma = powers_to_omega_rothberger(grid_powers());
  for (const auto& f : d->batteries.finite_sets) EXPECT_LE(std::get<sets::Points>(f.v).points.size(), 3u);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto t = run_game(spec_for(d, CoverClass::Omega, 64, seed), adversary_strategy(d, CoverClass::Omega), sigma);
    ASSERT_FALSE(t.report.aborted) << t.report.abort_reason;
    EXPECT_TRUE(t.report.p2_wins) << "seed " << seed;
  }
}

TEST(Powers, RowsFollowThePairing) {
  auto d = space("DiscreteN");
  auto g = spec_for(d, CoverClass::Omega, 40, 3);
  g.audit = true;
  auto t = run_game(g, adversary_strategy(d, CoverClass::Omega), powers_to_omega_rothberger(grid_powers()));
  ASSERT_FALSE(t.report.aborted) << t.report.abort_reason;
  auto pf = combinatorics::build_pairing(combinatorics::RangeConstraint::empty());
  std::map<std::size_t, std::size_t> next;
  for (const auto& rec : t.rounds) {
    const auto& a = rec.audit.at("p2");
    auto [m, k] = combinatorics::beta_inverse(*pf, rec.n);
    EXPECT_EQ(a.at("m").get<std::size_t>(), m);
    EXPECT_EQ(a.at("k").get<std::size_t>(), k);
    EXPECT_EQ(k, next[m]++);
    EXPECT_EQ(a.at("index").get<std::size_t>(), rec.indices.at(0));
  }
}

TEST(Powers, LiftedCoverCoversPowerBattery) {
  auto d = space("DiscreteN");
  auto c = adversary_cover(d, CoverClass::Omega, 11);
  auto p = power_of(d, 2);
  Cover lifted = lift_to_power(c, 2, p);
  std::vector<SetDesc> challenges;
  for (Nat a = 0; a < 4; ++a)
    for (Nat b = 0; b < 4; ++b)
      challenges.push_back(point_set(PointId::tuple({PointId::nat(a), PointId::nat(b), PointId::nat(a + b)})));
  for (const auto& k : challenges) {
    auto i = lifted.select(k);
    ASSERT_TRUE(i);
    EXPECT_TRUE(contains(*p, k, *lifted.element(*i)));
  }
}

TEST(MarkovOmegaMenger, RealFiniteSetsCovered) {
  auto r = space("RealLineModel");
  PowerWitnesses w = [](std::size_t j, std::size_t l) {
    long long v = static_cast<long long>(l);
    if (j == 0) return closed(q(-v), q(v));
    return product(std::vector<SetDesc>(j + 1, closed(q(-v), q(v))));
  };
  auto sigma = markov_omega_menger_from_src(w);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    auto g = spec_for(r, CoverClass::Omega, 32, seed, SelectionMode::Finite);
    g.audit = true;
    auto t = run_game(g, adversary_strategy(r, CoverClass::Omega), sigma);
    ASSERT_FALSE(t.report.aborted) << t.report.abort_reason;
    EXPECT_TRUE(t.report.p2_wins) << "seed " << seed;
    for (const auto& rec : t.rounds) {
      for (const auto& row : rec.audit.at("p2").at("rows")) EXPECT_LE(row.at("j").get<std::size_t>(), rec.n);
    }
  }
}

// ---- Baire adversary ----

TEST(Baire, EscapeAvoidsEverySelectedCylinder) {
  auto b = space("BaireModel");
  auto adv = baire_adversary(b, 4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = spec_for(b, CoverClass::O, 64, seed, SelectionMode::Finite);
    auto t = run_game(g, adv.source, random_bounded_selector(4));
    ASSERT_FALSE(t.report.aborted) << t.report.abort_reason;
    Word f = adv.escape(t);
    EXPECT_GE(f.size(), 64u);
    PointId x = PointId::word(f);
    for (const auto& rec : t.rounds) {
      EXPECT_LE(rec.selected.size(), 4u);
      for (const auto& e : rec.selected) EXPECT_FALSE(member(*b, x, e)) << "seed " << seed << " round " << rec.n;
    }
  }
}

TEST(Baire, LeastAvoidingDigit) {
  EXPECT_EQ(escape_word({{0}}, 1), (Word{1}));
  EXPECT_EQ(escape_word({}, 3), (Word{0, 0, 0}));
  EXPECT_EQ(escape_word({{0}, {1}, {2, 0}}, 2), (Word{3, 0}));
}

TEST(Baire, UnboundedRoundRejected) {
  auto b = space("BaireModel");
  auto adv = baire_adversary(b, 1);
  auto t = run_game(spec_for(b, CoverClass::O, 10, 3, SelectionMode::Finite), adv.source, random_bounded_selector(4));
  bool over = false;
  for (const auto& rec : t.rounds) over = over || rec.selected.size() > 1;
  ASSERT_TRUE(over);
  EXPECT_THROW(adv.escape(t), Error);
}

// ---- the [0,1] ⊔ Fortissimo example ----

namespace {

GameSpec chq_spec(DualKind kind, std::optional<CoverClass> target, std::size_t horizon) {
  GameSpec g;
  g.selection = SelectionMode::Single;
  g.p1_class = kind;
  g.target = target;
  g.space = space("CHQ");
  g.horizon = horizon;
  g.seed = 17;
  g.audit = true;
  return g;
}

}  // namespace

TEST(Chq, FirstMoveIsIntervalPlusInfinity) {
  auto k0 = chq_k({}, 0);
  auto c = space("CHQ");
  EXPECT_TRUE(subset(*c, inject(0, closed(q(0), q(1))), k0));
  EXPECT_TRUE(in_set(PointId::inject(1, PointId::infinity()), k0));
  EXPECT_FALSE(in_set(PointId::inject(1, PointId::nat(0)), k0));
}

TEST(Chq, TriangularPrefixAfterTwoRounds) {
  std::vector<std::vector<PointId>> a{{PointId::nat(5), PointId::nat(6)}, {PointId::nat(7), PointId::nat(8)}};
  auto k2 = chq_k(a, 2);
  for (const auto& row : a)
    for (const auto& p : row) EXPECT_TRUE(in_set(PointId::inject(1, p), k2));
  auto k1 = chq_k(a, 1);
  EXPECT_TRUE(in_set(PointId::inject(1, PointId::nat(5)), k1));
  EXPECT_FALSE(in_set(PointId::inject(1, PointId::nat(6)), k1));
}

TEST(Chq, NamedComplementParsing) {
  OpenDesc u = unite(inject(0, whole()), inject(1, co_named({PointId::nat(3), PointId::nat(9)})));
  EXPECT_EQ(named_complement(u), (std::vector<PointId>{PointId::nat(3), PointId::nat(9)}));
  EXPECT_TRUE(named_complement(unite(inject(0, whole()), inject(1, whole()))).empty());
  EXPECT_THROW(named_complement(inject(1, singleton(PointId::nat(2)))), Error);
}

TEST(Chq, CompactOpenReplayKeepsBookkeeping) {
  auto c = space("CHQ");
  auto t = run_dual_game(chq_spec(DualKind::CompactMove, CoverClass::K, 128), chq_p1_compact_open(), chq_naive_p2());
  ASSERT_FALSE(t.report.aborted) << t.report.abort_reason;
  ASSERT_EQ(t.rounds.size(), 128u);
  const SetDesc k0 = chq_k({}, 0);
  std::vector<std::vector<PointId>> a;
  std::optional<SetDesc> prev;
  for (const auto& rec : t.rounds) {
    SetDesc k = set_from_json(nlohmann::json::parse(rec.p1.dump()));  // ordered_json to json
    EXPECT_EQ(canonical_key(k), canonical_key(chq_k(a, rec.n))) << "round " << rec.n;
    EXPECT_TRUE(subset(*c, k0, k));
    if (prev) {
      EXPECT_TRUE(subset(*c, *prev, k));
    }
    EXPECT_TRUE(contains(*c, k, rec.selected[0]));
    prev = k;
    a.push_back(named_complement(rec.selected[0]));
  }
  // Every battery compact lies in some later answer.
  EXPECT_TRUE(t.report.p2_wins) << (t.report.uncovered ? to_string(*t.report.uncovered) : "");
  for (const auto& v : t.report.verdicts) EXPECT_TRUE(v.round.has_value());
}

TEST(Chq, FiniteOpenLedgerAndUncoveredPoint) {
  auto c = space("CHQ");
  auto t = run_dual_game(chq_spec(DualKind::FiniteSetMove, std::nullopt, 128), chq_point_enumerator(c),
                         chq_p2_finite_open());
  ASSERT_FALSE(t.report.aborted) << t.report.abort_reason;
  ASSERT_EQ(t.rounds.size(), 128u);
  auto ledger = chq_measure_ledger(t);
  EXPECT_TRUE(ledger.per_round_ok);
  EXPECT_TRUE(ledger.total_ok);
  EXPECT_LT(ledger.total * 2, Rational(1));
  for (std::size_t n = 0; n < ledger.per_round.size(); ++n) EXPECT_LT(ledger.per_round[n] * pow2(n + 2), Rational(1));
  ASSERT_TRUE(t.report.exhibited);
  auto ip = t.report.exhibited->injected();
  ASSERT_TRUE(ip);
  EXPECT_EQ(ip->summand, 0u);
  auto x = ip->point->numeric();
  ASSERT_TRUE(x);
  EXPECT_GE(*x, 0);
  EXPECT_LE(*x, 1);
  for (const auto& rec : t.rounds) EXPECT_FALSE(member(*c, *t.report.exhibited, rec.selected[0]));
  EXPECT_TRUE(t.report.p2_wins);
}
