#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "selgame/game/strategy.hpp"

namespace selgame::game {

// Dual games: P1 names a set and P2 answers with an open set around it.
enum class DualKind { CompactMove, FiniteSetMove };

const char* dual_kind_name(DualKind k);

struct GameSpec {
  SelectionMode selection = SelectionMode::Single;
  std::variant<CoverClass, DualKind> p1_class = CoverClass::O;
  // nullopt: P2 tries to avoid forming a cover.
  std::optional<CoverClass> target = CoverClass::O;
  SpacePtr space;
  std::size_t horizon = 0;
  std::uint64_t seed = 0;
  bool audit = false;
  // Replaces the battery implied by the target.
  std::optional<std::vector<SetDesc>> battery;
  // Re-verify each P1 cover against its class battery before P2 moves.
  bool check_p1 = true;

  bool dual() const { return std::holds_alternative<DualKind>(p1_class); }
};

struct RoundRecord {
  std::size_t n = 0;
  nlohmann::ordered_json p1;
  // Cover games: chosen indices. Dual games: empty.
  std::vector<std::size_t> indices;
  // Elements at `indices`, or P2's open set in a dual game.
  std::vector<OpenDesc> selected;
  nlohmann::json audit;
};

struct Verdict {
  SetDesc challenge;
  // First round with a selected element containing the challenge, and its index.
  std::optional<std::size_t> round;
  std::vector<std::size_t> indices;
};

struct Report {
  std::vector<Verdict> verdicts;
  bool p2_wins = false;
  bool aborted = false;
  std::string abort_reason;
  std::optional<SetDesc> uncovered;
  // Avoid-cover games: a point outside every selected set.
  std::optional<PointId> exhibited;
};

struct Transcript {
  GameSpec spec;
  std::vector<RoundRecord> rounds;
  Report report;
};

// Engine hook that may rewrite the full history before windows are applied.
template <class Seen>
using Tamper = std::function<void(Window<Seen>&)>;

struct RunOptions {
  Tamper<Cover> tamper_p2;
  Tamper<Selected> tamper_p1;
};

Transcript run_game(const GameSpec& spec, const P1CoverStrategy& p1, const P2CoverStrategy& p2,
                    const RunOptions& opts = {});
// P1 plays the listed covers in order.
Transcript run_game(const GameSpec& spec, const std::vector<Cover>& p1_moves, const P2CoverStrategy& p2,
                    const RunOptions& opts = {});
Transcript run_dual_game(const GameSpec& spec, const P1DualStrategy& p1, const P2DualStrategy& p2);

std::vector<SetDesc> judge_battery(const GameSpec& spec);
Report judge(const Transcript& t, const std::vector<SetDesc>& battery, std::optional<CoverClass> target);
Report judge(const Transcript& t);

P1CoverStrategy fixed_moves(std::vector<Cover> moves);
// The same choices read as singleton finite selections.
P2CoverStrategy as_finite(const P2CoverStrategy& single);

}  // namespace selgame::game
