#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "selgame/strategies/markov.hpp"
#include "selgame/topology/cover_ops.hpp"
#include "selgame/witnesses/witnesses.hpp"

using namespace selgame;
using namespace selgame::topology;
using namespace selgame::witnesses;
using fixtures::space;

namespace {

Rational q(long long n, long long d = 1) { return Rational(n) / Rational(d); }

std::vector<SetDesc> pairs_below(Nat limit) {
  std::vector<SetDesc> out;
  for (Nat a = 0; a < limit; ++a) {
    out.push_back(point_set(PointId::nat(a)));
    for (Nat b = a + 1; b < limit; ++b) out.push_back(points({PointId::nat(a), PointId::nat(b)}));
  }
  return out;
}

Nat max_nat(const SetDesc& b) {
  Nat m = 0;
  for (const auto& p : std::get<sets::Points>(b.v).points) m = std::max(m, std::get<Nat>(p.v));
  return m;
}

}  // namespace

// ---- check_cofinality ----

TEST(Cofinality, DiscreteSegmentsServeFiniteSets) {
  auto d = space("DiscreteN");
  auto w = witness_from_pattern(WitnessKind::Hemicompact, "initial_segments", 40);
  auto battery = pairs_below(32);
  auto r = check_cofinality(*d, w, battery, CofMode::Cof, 32);
  ASSERT_TRUE(r.ok());
  // {0..n} first holds B when n reaches max B.
  for (std::size_t i = 0; i < battery.size(); ++i) EXPECT_EQ(r.claim->witness[i], max_nat(battery[i]));
}

TEST(Cofinality, BoundTooSmallNamesCounterexample) {
  auto d = space("DiscreteN");
  auto w = witness_from_pattern(WitnessKind::Hemicompact, "initial_segments", 40);
  auto r = check_cofinality(*d, w, pairs_below(10), CofMode::Cof, 5);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(max_nat(*r.counterexample), 6u);
}

TEST(Cofinality, HatAndPlainAgreeOnT1Models) {
  std::size_t compared = 0;
  for (const auto& id : fixtures::registry().ids()) {
    auto s = space(id);
    if (!s->flags.t1) continue;
    std::vector<std::vector<SetDesc>> batteries{s->batteries.finite_sets, s->batteries.compacts};
    std::vector<SetDesc> pts;
    for (const auto& p : s->batteries.points) pts.push_back(point_set(p));
    batteries.push_back(pts);
    for (const auto& [name, w] : s->witnesses) {
      for (const auto& b : batteries) {
        if (b.empty()) continue;
        auto plain = check_cofinality(*s, w, b, CofMode::Cof, w.size());
        auto hat = check_cofinality(*s, w, b, CofMode::CofHat, w.size());
        EXPECT_EQ(plain.ok(), hat.ok()) << id << "/" << name;
        if (plain.ok() && hat.ok()) {
          EXPECT_EQ(plain.claim->witness, hat.claim->witness) << id << "/" << name;
        }
        ++compared;
      }
    }
  }
  EXPECT_GE(compared, 10u);
}

TEST(Cofinality, SaturationMatchesMembershipOnT1Points) {
  auto r = space("RealLineModel");
  for (const auto& x : r->batteries.points) {
    for (const auto& a : r->batteries.compacts) EXPECT_EQ(in_sat(*r, x, a), in_set(x, a)) << to_string(x);
  }
}

TEST(Cofinality, RightOrderIntegersViaSaturation) {
  auto ro = space("RightOrderModel");
  ASSERT_FALSE(ro->flags.t1);
  ASSERT_EQ(ro->batteries.points.size(), 100u);
  const auto& w = ro->witness("integers");
  std::vector<SetDesc> battery;
  for (const auto& p : ro->batteries.points) battery.push_back(point_set(p));
  auto r = check_cofinality(*ro, w, battery, CofMode::CofHat, w.size());
  ASSERT_TRUE(r.ok()) << to_string(*r.counterexample);
  // x ∈ sat({z}) iff x >= z; the first member of the enumeration at or below x.
  for (std::size_t i = 0; i < battery.size(); ++i) {
    Rational x = *ro->batteries.points[i].numeric();
    std::size_t n = 0;
    while (*std::get<sets::Points>(w.at(n).v).points[0].numeric() > x) ++n;
    EXPECT_EQ(r.claim->witness[i], n) << to_string(ro->batteries.points[i]);
  }
  // Without saturation a non-integer point is never inside a singleton.
  auto plain = check_cofinality(*ro, w, battery, CofMode::Cof, w.size());
  ASSERT_FALSE(plain.ok());
  auto x = *std::get<sets::Points>(plain.counterexample->v).points[0].numeric();
  EXPECT_NE(x, Rational(boost::multiprecision::numerator(x)));
}

// ---- implication chain ----

TEST(ImplicationChain, HemicompactBallsKeepTheirMembers) {
  auto r = space("RealLineModel");
  const auto& w = r->witness("balls");
  auto out = implication_chain(*r, w);
  EXPECT_EQ(out.kind, WitnessKind::WeaklyRelativelyHemicompact);
  EXPECT_EQ(out.members, w.members);
  EXPECT_TRUE(validate_family(*r, out).ok);
}

TEST(ImplicationChain, WeaklyRelativeToSigmaCoversPoints) {
  auto r = space("RealLineModel");
  auto out = implication_chain(*r, implication_chain(*r, r->witness("balls")));
  EXPECT_EQ(out.kind, WitnessKind::SigmaRelativelyCompact);
  for (const auto& x : r->batteries.points) {
    EXPECT_TRUE(std::any_of(out.members.begin(), out.members.end(), [&](const SetDesc& m) { return in_set(x, m); }))
        << to_string(x);
  }
}

TEST(ImplicationChain, DiscreteNaturalsBecomePrefixSets) {
  auto d = space("DiscreteN");
  const auto& w = d->witness("naturals");
  auto out = implication_chain(*d, w);
  EXPECT_EQ(out.kind, WitnessKind::NearlyHemicompact);
  ASSERT_EQ(out.size(), w.size());
  for (std::size_t n = 0; n < out.size(); ++n) {
    EXPECT_EQ(std::get<sets::Points>(out.members[n].v).points.size(), n + 1);
    EXPECT_TRUE(in_set(PointId::nat(n), out.members[n]));
  }
  EXPECT_TRUE(validate_family(*d, out).ok);
}

TEST(ImplicationChain, EveryChainStepValidates) {
  std::size_t steps = 0;
  for (const char* id : {"RealLineModel", "DiscreteN"}) {
    auto s = space(id);
    for (const auto& [name, w0] : s->witnesses) {
      ASSERT_TRUE(validate_family(*s, w0).ok) << id << "/" << name << ": " << validate_family(*s, w0).detail;
      WitnessFamily w = w0;
      for (;;) {
        try {
          w = implication_chain(*s, w);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), Errc::Unsupported);
          break;
        }
        auto v = validate_family(*s, w);
        EXPECT_TRUE(v.ok) << id << "/" << name << ": " << v.detail;
        ++steps;
      }
    }
  }
  EXPECT_GE(steps, 6u);
}

TEST(ImplicationChain, NoEdgeFromSigma) {
  auto r = space("RealLineModel");
  auto w = r->witness("balls");
  w.kind = WitnessKind::SigmaRelativelyCompact;
  EXPECT_THROW(implication_chain(*r, w), Error);
}

TEST(ImplicationChain, DerivedFamilyDrivesAWinningStrategy) {
  auto r = space("RealLineModel");
  auto w = implication_chain(*r, r->witness("balls"));
  auto sigma = strategies::markov_from_cofinality(w, CoverClass::K);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto t = game::run_game(fixtures::k_game(r, 32, seed), game::adversary_strategy(r, CoverClass::K), sigma);
    ASSERT_FALSE(t.report.aborted) << t.report.abort_reason;
    EXPECT_TRUE(t.report.p2_wins);
  }
}

// ---- regular collapse ----

TEST(RegularCollapse, OpenBallsCloseToBalls) {
  auto r = space("RealLineModel");
  const auto& w = r->witness("open_balls");
  auto out = regular_collapse(*r, w);
  EXPECT_EQ(out.kind, WitnessKind::Hemicompact);
  ASSERT_EQ(out.size(), w.size());
  for (std::size_t n = 0; n < out.size(); ++n) {
    long long v = static_cast<long long>(n);
    EXPECT_EQ(out.members[n], n == 0 ? points({}) : closed(q(-v), q(v)));
  }
  EXPECT_TRUE(validate_family(*r, out).ok);
}

TEST(RegularCollapse, ClosedMembersUnchanged) {
  auto r = space("RealLineModel");
  const auto& w = r->witness("balls");
  auto out = regular_collapse(*r, w);
  EXPECT_EQ(out.kind, WitnessKind::RelativelyHemicompact);
  EXPECT_EQ(out.members, w.members);
}

TEST(RegularCollapse, RoundTripContainsOriginals) {
  for (const char* id : {"RealLineModel", "DiscreteN"}) {
    auto s = space(id);
    for (const auto& [name, w] : s->witnesses) {
      if (w.kind != WitnessKind::Hemicompact) continue;
      auto back = regular_collapse(*s, regular_collapse(*s, w));
      EXPECT_EQ(back.kind, WitnessKind::Hemicompact);
      ASSERT_EQ(back.size(), w.size());
      for (std::size_t n = 0; n < w.size(); ++n) EXPECT_TRUE(subset(*s, w.members[n], back.members[n]));
      EXPECT_TRUE(validate_family(*s, back).ok);
    }
  }
}

TEST(RegularCollapse, NeedsRegularModel) {
  auto ro = space("RightOrderModel");
  WitnessFamily w;
  w.kind = WitnessKind::Hemicompact;
  w.members = {point_set(PointId::rat(0))};
  EXPECT_THROW(regular_collapse(*ro, w), Error);
}

TEST(RegularCollapse, NeedsAClosureOperator) {
  auto so = space("SorgenfreyModel");
  ASSERT_TRUE(so->flags.regular);
  WitnessFamily w;
  w.kind = WitnessKind::RelativelyHemicompact;
  w.members = {open_set(q(0), q(1))};
  try {
    regular_collapse(*so, w);
    FAIL() << "expected Unsupported";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Unsupported);
  }
}

// ---- relative-cover bridge ----

namespace {

Cover interval_cover(const SpacePtr& r, long long step) {
  std::vector<OpenDesc> es;
  for (long long i = -40; i <= 40; i += step) es.push_back(interval(q(i - step), q(i + step)));
  es.push_back(interval(std::nullopt, q(-39)));
  es.push_back(interval(q(39), std::nullopt));
  return Cover::from_elements("I" + std::to_string(step), r, CoverClass::O, es);
}

}  // namespace

TEST(Bridge, SingleProbeIsTheSelection) {
  auto r = space("RealLineModel");
  auto sigma = game::as_finite(strategies::markov_from_cofinality(r->witness("balls"), CoverClass::K));
  Cover c = interval_cover(r, 2);
  auto res = markov_menger_relcover_bridge(sigma, {c}, 5);
  ASSERT_EQ(res.subcovers.size(), 1u);
  OpenDesc u;
  for (std::size_t i : res.subcovers[0]) u = unite(u, *c.element(i));
  EXPECT_TRUE(open_subset(*r, res.a, u));
  EXPECT_TRUE(contains(*r, closed(q(-5), q(5)), res.a));
}

TEST(Bridge, FiveProbesHoldTheBall) {
  auto r = space("RealLineModel");
  auto sigma = game::as_finite(strategies::markov_from_cofinality(r->witness("balls"), CoverClass::K));
  std::vector<Cover> probes;
  for (long long step : {1, 2, 3, 5, 7}) probes.push_back(interval_cover(r, step));
  for (std::size_t n : {0u, 3u, 8u}) {
    auto res = markov_menger_relcover_bridge(sigma, probes, n);
    long long v = static_cast<long long>(n);
    EXPECT_TRUE(contains(*r, closed(q(-v), q(v)), res.a)) << "n = " << n;
    ASSERT_EQ(res.subcovers.size(), probes.size());
    for (std::size_t i = 0; i < probes.size(); ++i) {
      OpenDesc u;
      for (std::size_t j : res.subcovers[i]) u = unite(u, *probes[i].element(j));
      EXPECT_TRUE(open_subset(*r, res.a, u));
      EXPECT_FALSE(res.subcovers[i].empty());
    }
  }
}
