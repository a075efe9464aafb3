#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "selgame/cli/commands.hpp"
#include "selgame/cli/verify.hpp"
#include "selgame/game/transcript_io.hpp"
#include "selgame/strategies/chq.hpp"
#include "selgame/topology/serialize.hpp"

using namespace selgame;
using namespace selgame::cli;
using namespace selgame::game;
using namespace selgame::topology;

namespace {

const std::string kRegistry = SELGAME_SOURCE_DIR "/data/registry.json";

std::string scenario(const std::string& name) { return SELGAME_SOURCE_DIR "/scenarios/" + name + ".json"; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("selgame_test_" + name);
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

Transcript replay(const std::string& name) {
  auto sc = load_scenario(scenario(name), fixtures::registry());
  return play_scenario(sc, fixtures::registry(), sc.spec.seed);
}

Transcript reparse(const std::string& text) {
  auto t = parse_jsonl(text, [](const std::string& id) { return fixtures::space(id); });
  t.report = judge(t);
  return t;
}

}  // namespace

TEST(Registry, SerializationIsAFixedPoint) {
  std::string text = slurp(kRegistry);
  auto reg = SpaceRegistry::parse_text(text);
  EXPECT_EQ(reg.serialize(), text);
  EXPECT_EQ(SpaceRegistry::parse(reg.to_json()).serialize(), text);
}

TEST(SpacesList, ShippedRegistryRowsSortedById) {
  std::ostringstream out, err;
  ASSERT_EQ(cmd_spaces_list(kRegistry, out, err), kExitOk);
  std::string s = out.str();
  std::vector<std::string> ids;
  std::istringstream lines(s);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) ids.push_back(line.substr(0, line.find(' ')));
  for (const char* id : {"DiscreteN", "RealLineModel", "BaireModel", "FortissimoModel"}) {
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  }
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  EXPECT_EQ(ids.size(), fixtures::registry().size());
}

TEST(SpacesList, EmptyRegistryGivesHeaderOnly) {
  std::ostringstream out, err;
  auto path = temp_file("empty.json", "{\"spaces\": [], \"version\": 1}\n");
  ASSERT_EQ(cmd_spaces_list(path, out, err), kExitOk) << err.str();
  std::string text = out.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1);
}

TEST(SpacesList, CorruptJsonExitsTwoWithLocation) {
  std::ostringstream out, err;
  auto path = temp_file("corrupt.json", "{\"spaces\": [\n  {\"id\": \n");
  EXPECT_EQ(cmd_spaces_list(path, out, err), kExitConfig);
  EXPECT_NE(err.str().find("line 3"), std::string::npos) << err.str();
}

TEST(Verify, UnknownSuiteExitsTwo) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify(kRegistry, {"no-such-suite"}, false, out, err), kExitConfig);
  EXPECT_THROW(run_suite("no-such-suite", fixtures::registry()), Error);
}

TEST(Verify, PairingSuitePassesWithJsonSummary) {
  std::ostringstream out, err;
  ASSERT_EQ(cmd_verify(kRegistry, {"pairing"}, true, out, err), kExitOk) << out.str();
  auto j = nlohmann::json::parse(out.str());
  EXPECT_TRUE(j.at("ok").get<bool>());
  ASSERT_EQ(j.at("suites").size(), 1u);
  EXPECT_EQ(j["suites"][0]["criterion"], 1);
  EXPECT_GE(j["suites"][0]["checks"].size(), 4u);
}

TEST(Verify, SuitesCoverEveryCriterionOnce) {
  std::vector<int> seen;
  for (const auto& s : suites()) seen.push_back(s.criterion);
  EXPECT_EQ(seen, (std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9}));
}

TEST(Golden, TranscriptsReplayByteForByte) {
  for (const char* name : {"chq_compact_open", "chq_finite_open", "product_k_rothberger", "product_k_menger"}) {
    std::string golden = slurp(SELGAME_SOURCE_DIR "/tests/golden/" + std::string(name) + ".jsonl");
    ASSERT_FALSE(golden.empty()) << name;
    EXPECT_EQ(to_jsonl(replay(name)), golden) << name;
  }
}

TEST(Golden, ParsedTranscriptsKeepTheirVerdicts) {
  for (const char* name : {"chq_compact_open", "chq_finite_open", "product_k_rothberger", "product_k_menger"}) {
    std::string golden = slurp(SELGAME_SOURCE_DIR "/tests/golden/" + std::string(name) + ".jsonl");
    auto t = reparse(golden);
    EXPECT_EQ(to_jsonl(t), golden) << name;
  }
}

TEST(Golden, ChqFiniteOpenLedgerFromFile) {
  auto t = reparse(slurp(SELGAME_SOURCE_DIR "/tests/golden/chq_finite_open.jsonl"));
  ASSERT_EQ(t.rounds.size(), 128u);
  auto ledger = strategies::chq_measure_ledger(t);
  EXPECT_TRUE(ledger.per_round_ok);
  EXPECT_LT(ledger.total, Rational(1) / 2);
  // Independent sum: interval lengths of each answer clipped to [0,1].
  Rational total = 0;
  for (const auto& rec : t.rounds) {
    for (const auto& a : rec.selected.at(0).atoms) {
      const auto* in = std::get_if<atoms::Inject>(&a);
      if (!in || in->summand != 0) continue;
      for (const auto& b : in->inner->atoms) {
        const auto* iv = std::get_if<atoms::Interval>(&b);
        if (!iv) continue;
        Rational lo = iv->lo ? std::max(*iv->lo, Rational(0)) : Rational(0);
        Rational hi = iv->hi ? std::min(*iv->hi, Rational(1)) : Rational(1);
        if (hi > lo) total += hi - lo;
      }
    }
  }
  EXPECT_EQ(total, ledger.total);
  ASSERT_TRUE(t.report.exhibited.has_value());
  const auto* ip = t.report.exhibited->injected();
  ASSERT_NE(ip, nullptr);
  EXPECT_EQ(ip->summand, 0u);
  auto x = ip->point->numeric();
  ASSERT_TRUE(x.has_value());
  EXPECT_TRUE(*x >= 0 && *x <= 1);
}

TEST(Play, HorizonZeroWritesHeaderAndReport) {
  auto doc = nlohmann::json::parse(slurp(scenario("markov_discrete")));
  doc["horizon"] = 0;
  auto sc_path = temp_file("h0.json", doc.dump());
  auto out_path = (std::filesystem::temp_directory_path() / "selgame_test_h0.jsonl").string();
  std::istringstream in;
  std::ostringstream out, err;
  Console io{in, out};
  ASSERT_EQ(cmd_play(kRegistry, sc_path, Human::None, out_path, io, err), kExitOk) << err.str();
  std::string text = slurp(out_path);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
  EXPECT_NE(text.find("{\"spec\""), std::string::npos);
  EXPECT_NE(text.find("{\"report\""), std::string::npos);
}

TEST(Play, HorizonAboveMaximumIsConfigError) {
  auto doc = nlohmann::json::parse(slurp(scenario("markov_discrete")));
  doc["horizon"] = kMaxHorizon + 1;
  EXPECT_THROW(parse_scenario(doc, fixtures::registry()), Error);
  doc["horizon"] = 4;
  doc["space"] = "NoSuchSpace";
  EXPECT_THROW(parse_scenario(doc, fixtures::registry()), Error);
  doc["space"] = "DiscreteN";
  doc["p2"]["witness"] = "no_such_family";
  EXPECT_THROW(parse_scenario(doc, fixtures::registry()), Error);
}

TEST(Play, IllegalScriptedMoveAbortsWithExitThree) {
  // A selector that cannot serve compacts on the real line fails in round 0.
  auto doc = nlohmann::json::parse(slurp(scenario("markov_discrete")));
  doc["space"] = "RealLineModel";
  doc["p2"] = {{"ref", "markov_from_cofinality"}, {"witness", {{"space", "DiscreteN"}, {"name", "initial_segments"}}},
               {"class", "K"}};
  auto sc_path = temp_file("abort.json", doc.dump());
  auto out_path = (std::filesystem::temp_directory_path() / "selgame_test_abort.jsonl").string();
  std::istringstream in;
  std::ostringstream out, err;
  Console io{in, out};
  EXPECT_EQ(cmd_play(kRegistry, sc_path, Human::None, out_path, io, err), kExitAborted) << out.str() << err.str();
  EXPECT_NE(out.str().find("aborted: round"), std::string::npos) << out.str();
  std::string text = slurp(out_path);
  EXPECT_NE(text.find("\"aborted\":true"), std::string::npos);
}

TEST(Interactive, OutOfRangeIndexRepromptsWithoutStateChange) {
  auto sc = load_scenario(scenario("interactive_discrete"), fixtures::registry());
  std::istringstream clean("0\n1\n2\n3\n");
  std::istringstream noisy("7777777\nabc\n-1\n0\n1,2\n1\nm\n2\n3\n");
  std::ostringstream o1, o2;
  Console c1{clean, o1}, c2{noisy, o2};
  auto a = play_scenario(sc, fixtures::registry(), 0, Human::P2, &c1);
  auto b = play_scenario(sc, fixtures::registry(), 0, Human::P2, &c2);
  EXPECT_EQ(to_jsonl(a), to_jsonl(b));
  EXPECT_FALSE(b.report.aborted);
  std::string log = o2.str();
  std::size_t illegal = 0;
  for (auto p = log.find("illegal:"); p != std::string::npos; p = log.find("illegal:", p + 1)) ++illegal;
  EXPECT_EQ(illegal, 4u);
}

TEST(Interactive, P1MenuRejectsOutOfRangeChoice) {
  auto sc = load_scenario(scenario("interactive_discrete"), fixtures::registry());
  std::istringstream in("9\n5\n5\n5\n5\n");
  std::ostringstream out;
  Console c{in, out};
  auto t = play_scenario(sc, fixtures::registry(), 0, Human::P1, &c);
  ASSERT_FALSE(t.report.aborted) << t.report.abort_reason;
  EXPECT_EQ(t.rounds.size(), 4u);
  EXPECT_NE(out.str().find("illegal: pick 0..5"), std::string::npos);
}

TEST(Interactive, EndOfInputAbortsTheGame) {
  auto sc = load_scenario(scenario("interactive_discrete"), fixtures::registry());
  std::istringstream in("0\n");
  std::ostringstream out;
  Console c{in, out};
  auto t = play_scenario(sc, fixtures::registry(), 0, Human::P2, &c);
  EXPECT_TRUE(t.report.aborted);
  EXPECT_EQ(t.rounds.size(), 1u);
}

TEST(Interactive, DualGamesAreRejected) {
  auto sc = load_scenario(scenario("chq_compact_open"), fixtures::registry());
  std::istringstream in;
  std::ostringstream out;
  Console c{in, out};
  EXPECT_THROW(play_scenario(sc, fixtures::registry(), 0, Human::P2, &c), Error);
}

TEST(Duel, ProductRothbergerWinsTwentySeeds) {
  std::ostringstream out, err;
  ASSERT_EQ(cmd_duel(kRegistry, scenario("product_k_rothberger"), 20, out, err), kExitOk) << err.str();
  EXPECT_NE(out.str().find("P2 won 20/20"), std::string::npos) << out.str();
}

TEST(Duel, RepeatedRunsAgree) {
  std::ostringstream a, b, err;
  ASSERT_EQ(cmd_duel(kRegistry, scenario("markov_discrete"), 5, a, err), kExitOk);
  ASSERT_EQ(cmd_duel(kRegistry, scenario("markov_discrete"), 5, b, err), kExitOk);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Duel, FalsifierReportsNamedLoss) {
  std::ostringstream out, err;
  ASSERT_EQ(cmd_duel(kRegistry, scenario("falsifier_shifted_balls"), 3, out, err), kExitOk) << err.str();
  EXPECT_NE(out.str().find("P2 won 0/3"), std::string::npos) << out.str();
  EXPECT_NE(out.str().find("uncovered [2000,2001]"), std::string::npos) << out.str();
}
