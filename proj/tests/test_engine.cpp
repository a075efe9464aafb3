#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "selgame/game/transcript_io.hpp"
#include "selgame/strategies/chq.hpp"
#include "selgame/strategies/markov.hpp"
#include "selgame/strategies/product.hpp"

using namespace selgame;
using namespace selgame::game;
using namespace selgame::topology;
using fixtures::space;

namespace {

SpacePtr resolve(const std::string& id) { return space(id); }

P2CoverStrategy segments() {
  return strategies::markov_from_cofinality(space("DiscreteN")->witness("initial_segments"), CoverClass::K);
}

// Full-strength P2 whose pick depends on the name of the first cover it saw.
P2CoverStrategy first_cover_sensitive() {
  P2CoverStrategy s;
  s.name = "first-cover-sensitive";
  s.owner = Owner::P2;
  s.strength = Strength::Full;
  s.factory = [](std::uint64_t) {
    return [](const Window<Cover>& w, nlohmann::json*) -> std::vector<std::size_t> {
      return {std::hash<std::string>{}(w.history.front().name()) % 5};
    };
  };
  return s;
}

void scramble_all_but_last(Window<Cover>& w) {
  auto d = space("DiscreteN");
  for (std::size_t i = 0; i + 1 < w.history.size(); ++i) w.history[i] = adversary_cover(d, CoverClass::K, 5000 + i);
}

}  // namespace

// ---- determinism ----

TEST(Determinism, RepeatedSeedGivesIdenticalBytes) {
  auto d = space("DiscreteN");
  for (std::uint64_t seed : {0u, 1u, 99u}) {
    auto g = fixtures::k_game(d, 32, seed);
    g.audit = true;
    auto a = to_jsonl(run_game(g, adversary_strategy(d, CoverClass::K), segments()));
    auto b = to_jsonl(run_game(g, adversary_strategy(d, CoverClass::K), segments()));
    EXPECT_EQ(a, b);
  }
}

TEST(Determinism, SeedChangesTheAdversary) {
  auto d = space("DiscreteN");
  auto a = to_jsonl(run_game(fixtures::k_game(d, 16, 1), adversary_strategy(d, CoverClass::K), segments()));
  auto b = to_jsonl(run_game(fixtures::k_game(d, 16, 2), adversary_strategy(d, CoverClass::K), segments()));
  EXPECT_NE(a, b);
}

TEST(Determinism, ProductStrategyRepeats) {
  auto r = space("RealLineModel");
  auto p = space("RealLine2");
  auto full = strength_coercion(strategies::markov_from_cofinality(r->witness("balls"), CoverClass::K), Strength::Full);
  auto sigma = strategies::product_k_rothberger(full, full);
  auto g = fixtures::k_game(p, 24, 7);
  g.audit = true;
  auto a = to_jsonl(run_game(g, adversary_strategy(p, CoverClass::K), sigma));
  auto b = to_jsonl(run_game(g, adversary_strategy(p, CoverClass::K), sigma));
  EXPECT_EQ(a, b);
}

TEST(Determinism, DualGameRepeats) {
  GameSpec g;
  g.p1_class = DualKind::CompactMove;
  g.target = CoverClass::K;
  g.space = space("CHQ");
  g.horizon = 24;
  g.seed = 3;
  g.audit = true;
  auto a = to_jsonl(run_dual_game(g, strategies::chq_p1_compact_open(), strategies::chq_naive_p2()));
  auto b = to_jsonl(run_dual_game(g, strategies::chq_p1_compact_open(), strategies::chq_naive_p2()));
  EXPECT_EQ(a, b);
}

// ---- transcript files ----

TEST(Jsonl, CoverGameRoundTrip) {
  auto d = space("DiscreteN");
  auto g = fixtures::k_game(d, 20, 4);
  g.audit = true;
  auto t = run_game(g, adversary_strategy(d, CoverClass::K), segments());
  std::string text = to_jsonl(t);
  auto back = parse_jsonl(text, resolve);
  EXPECT_EQ(back.rounds.size(), t.rounds.size());
  back.report = judge(back);
  EXPECT_EQ(to_jsonl(back), text);
}

TEST(Jsonl, DualGameRoundTrip) {
  GameSpec g;
  g.p1_class = DualKind::FiniteSetMove;
  g.target.reset();
  g.space = space("CHQ");
  g.horizon = 12;
  g.audit = true;
  auto t = run_dual_game(g, strategies::chq_point_enumerator(g.space), strategies::chq_p2_finite_open());
  std::string text = to_jsonl(t);
  auto back = parse_jsonl(text, resolve);
  back.report = judge(back);
  EXPECT_EQ(to_jsonl(back), text);
}

TEST(Jsonl, BatteryOverrideSurvives) {
  auto d = space("DiscreteN");
  auto g = fixtures::k_game(d, 4, 0);
  g.battery = std::vector<SetDesc>{point_set(PointId::nat(2)), point_set(PointId::nat(50))};
  auto t = run_game(g, adversary_strategy(d, CoverClass::K), segments());
  EXPECT_FALSE(t.report.p2_wins);
  EXPECT_EQ(*t.report.uncovered, point_set(PointId::nat(50)));
  auto back = parse_jsonl(to_jsonl(t), resolve);
  ASSERT_TRUE(back.spec.battery);
  EXPECT_EQ(*back.spec.battery, *g.battery);
}

TEST(Jsonl, MalformedLinesReported) {
  EXPECT_THROW(parse_jsonl("{\"n\":0,\"p1\":{},\"p2\":[0]}\n", resolve), Error);
  EXPECT_THROW(parse_jsonl("not json\n", resolve), Error);
  EXPECT_THROW(parse_jsonl("", resolve), Error);
}

// ---- windows ----

TEST(Windows, NarrowKeepsOnlyWhatTheStrengthSees) {
  Window<int> w{5, {1, 2, 3}};
  EXPECT_EQ(narrow(w, Strength::Full).history, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(narrow(w, Strength::Markov).history, (std::vector<int>{3}));
  EXPECT_EQ(narrow(w, Strength::Markov).round, 5u);
  EXPECT_TRUE(narrow(w, Strength::Predetermined).history.empty());
  EXPECT_EQ(narrow(w, Strength::Predetermined).round, 5u);
  EXPECT_EQ(narrow(w, Strength::Constant).round, 0u);
}

TEST(Windows, CoercionNeverWidens) {
  auto m = segments();
  EXPECT_EQ(strength_coercion(m, Strength::Full).strength, Strength::Full);
  try {
    strength_coercion(m, Strength::Predetermined);
    FAIL() << "expected Unsupported";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Unsupported);
  }
}

TEST(Windows, MarkovIgnoresOlderHistory) {
  auto d = space("DiscreteN");
  auto g = fixtures::k_game(d, 32, 8);
  auto base = run_game(g, adversary_strategy(d, CoverClass::K), segments());
  RunOptions opts;
  opts.tamper_p2 = scramble_all_but_last;
  auto t = run_game(g, adversary_strategy(d, CoverClass::K), segments(), opts);
  EXPECT_EQ(to_jsonl(base), to_jsonl(t));
}

TEST(Windows, CoercedMarkovStillIgnoresOlderHistory) {
  auto d = space("DiscreteN");
  auto g = fixtures::k_game(d, 32, 8);
  auto full = strength_coercion(segments(), Strength::Full);
  auto base = run_game(g, adversary_strategy(d, CoverClass::K), full);
  RunOptions opts;
  opts.tamper_p2 = scramble_all_but_last;
  EXPECT_EQ(to_jsonl(base), to_jsonl(run_game(g, adversary_strategy(d, CoverClass::K), full, opts)));
}

TEST(Windows, PredeterminedP1IgnoresSelections) {
  auto d = space("DiscreteN");
  auto g = fixtures::k_game(d, 32, 12);
  auto base = run_game(g, adversary_strategy(d, CoverClass::K), segments());
  RunOptions opts;
  opts.tamper_p1 = [](Window<Selected>& w) {
    for (auto& s : w.history) s = Selected{{999}, {whole()}};
  };
  EXPECT_EQ(to_jsonl(base), to_jsonl(run_game(g, adversary_strategy(d, CoverClass::K), segments(), opts)));
}

TEST(Windows, TamperingReachesFullStrategies) {
  // Control: the same tamper must change a strategy that reads old covers.
  auto d = space("DiscreteN");
  auto g = fixtures::k_game(d, 6, 0);
  g.check_p1 = false;
  g.target = CoverClass::O;
  g.p1_class = CoverClass::O;
  auto base = run_game(g, adversary_strategy(d, CoverClass::O), first_cover_sensitive());
  RunOptions opts;
  opts.tamper_p2 = [](Window<Cover>& w) {
    auto dn = space("DiscreteN");
    if (w.history.size() > 1) w.history[0] = adversary_cover(dn, CoverClass::O, 1).renamed("tampered");
  };
  auto t = run_game(g, adversary_strategy(d, CoverClass::O), first_cover_sensitive(), opts);
  ASSERT_EQ(base.rounds.size(), t.rounds.size());
  bool differs = false;
  for (std::size_t i = 1; i < t.rounds.size(); ++i) differs = differs || base.rounds[i].indices != t.rounds[i].indices;
  EXPECT_TRUE(differs);
}

// ---- rule enforcement ----

TEST(Rules, SelectionArityMustMatch) {
  auto d = space("DiscreteN");
  auto g = fixtures::k_game(d, 4, 0, SelectionMode::Finite);
  EXPECT_THROW(run_game(g, adversary_strategy(d, CoverClass::K), segments()), Error);
}

TEST(Rules, OwnersMustMatch) {
  auto d = space("DiscreteN");
  auto p2 = segments();
  p2.owner = Owner::P1;
  EXPECT_THROW(run_game(fixtures::k_game(d, 4, 0), adversary_strategy(d, CoverClass::K), p2), Error);
}

TEST(Rules, UnsoundCoverAbortsTheGame) {
  auto d = space("DiscreteN");
  auto bad = Cover::from_elements("evens", d, CoverClass::K, {singleton(PointId::nat(0)), singleton(PointId::nat(2))});
  auto t = run_game(fixtures::k_game(d, 3, 0), std::vector<Cover>(3, bad), segments());
  EXPECT_TRUE(t.report.aborted);
  EXPECT_NE(t.report.abort_reason.find("illegal P1 move"), std::string::npos);
  EXPECT_TRUE(t.rounds.empty());
}

TEST(Rules, SelectorPicksTheElementHoldingTheWitness) {
  auto d = space("DiscreteN");
  auto c = Cover::from_elements("pair", d, CoverClass::K, {singleton(PointId::nat(0)), whole()});
  WitnessFamily w;
  w.kind = WitnessKind::Hemicompact;
  w.members = {point_set(PointId::nat(0)), point_set(PointId::nat(7))};
  auto sigma = strategies::markov_from_cofinality(w, CoverClass::K);
  auto g = fixtures::k_game(d, 3, 0);
  g.check_p1 = false;
  // Element 1 holds {7}; index 0 only holds {0}.
  auto t = run_game(g, std::vector<Cover>(3, c), sigma);
  EXPECT_FALSE(t.report.aborted) << t.report.abort_reason;
  EXPECT_EQ(t.rounds.size(), 3u);
  EXPECT_EQ(t.rounds[1].indices, (std::vector<std::size_t>{1}));
}

TEST(Rules, SelectorFailureAbortsWithRound) {
  auto d = space("DiscreteN");
  auto c = Cover::from_elements("pair", d, CoverClass::K, {singleton(PointId::nat(0)), singleton(PointId::nat(7))});
  WitnessFamily w;
  w.kind = WitnessKind::Hemicompact;
  w.members = {point_set(PointId::nat(0)), point_set(PointId::nat(5))};
  auto g = fixtures::k_game(d, 3, 0);
  g.check_p1 = false;
  auto t = run_game(g, std::vector<Cover>(3, c), strategies::markov_from_cofinality(w, CoverClass::K));
  EXPECT_TRUE(t.report.aborted);
  EXPECT_EQ(t.rounds.size(), 1u);
  EXPECT_EQ(t.report.abort_reason.rfind("round 1: P2 failed", 0), 0u) << t.report.abort_reason;
}

TEST(Rules, IndexOutOfRangeIsIllegal) {
  auto d = space("DiscreteN");
  P2CoverStrategy far;
  far.name = "far";
  far.strength = Strength::Constant;
  far.factory = [](std::uint64_t) {
    return [](const Window<Cover>&, nlohmann::json*) { return std::vector<std::size_t>{1000}; };
  };
  auto c = Cover::from_elements("one", d, CoverClass::K, {whole()});
  auto t = run_game(fixtures::k_game(d, 2, 0), std::vector<Cover>(2, c), far);
  EXPECT_TRUE(t.report.aborted);
  EXPECT_NE(t.report.abort_reason.find("out of range"), std::string::npos);
}

// ---- single vs finite ----

TEST(Judge, SingleWinImpliesFiniteWin) {
  auto r = space("RealLineModel");
  auto sigma = strategies::markov_from_cofinality(r->witness("balls"), CoverClass::K);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto single = run_game(fixtures::k_game(r, 16, seed), adversary_strategy(r, CoverClass::K), sigma);
    auto finite = run_game(fixtures::k_game(r, 16, seed, SelectionMode::Finite), adversary_strategy(r, CoverClass::K),
                           as_finite(sigma));
    EXPECT_LE(single.report.p2_wins, finite.report.p2_wins);
    for (std::size_t i = 0; i < single.report.verdicts.size(); ++i) {
      if (single.report.verdicts[i].round) {
        EXPECT_TRUE(finite.report.verdicts[i].round);
      }
    }
  }
}

TEST(Judge, ChallengeMustSitInOneElement) {
  auto d = space("DiscreteN");
  auto c = Cover::from_elements("split", d, CoverClass::O,
                                {singleton(PointId::nat(0)), singleton(PointId::nat(1)), whole()});
  P2CoverStrategy both;
  both.name = "both";
  both.strength = Strength::Constant;
  both.selection = SelectionMode::Finite;
  both.factory = [](std::uint64_t) {
    return [](const Window<Cover>&, nlohmann::json*) { return std::vector<std::size_t>{0, 1}; };
  };
  auto g = fixtures::k_game(d, 1, 0, SelectionMode::Finite);
  g.check_p1 = false;
  g.battery = std::vector<SetDesc>{points({PointId::nat(0), PointId::nat(1)})};
  auto t = run_game(g, std::vector<Cover>{c}, both);
  EXPECT_FALSE(t.report.p2_wins);
}

TEST(Judge, BatteryMustFitTarget) {
  auto d = space("DiscreteN");
  auto g = fixtures::k_game(d, 1, 0);
  g.target = CoverClass::O;
  g.battery = std::vector<SetDesc>{points({PointId::nat(0), PointId::nat(1)})};
  Transcript t;
  t.spec = g;
  EXPECT_THROW(judge(t), Error);
}
