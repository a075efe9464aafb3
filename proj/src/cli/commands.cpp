#include "selgame/cli/commands.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "selgame/cli/verify.hpp"
#include "selgame/game/transcript_io.hpp"
#include "selgame/strategies/chq.hpp"

namespace selgame::cli {

using namespace topology;
using namespace game;

namespace {

// Configuration problems become exit 2; everything else propagates.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "selgame: " << e.what() << "\n";
    return kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    err << "selgame: " << e.what() << "\n";
    return kExitConfig;
  }
}

std::size_t covered(const Report& r) {
  std::size_t n = 0;
  for (const auto& v : r.verdicts) n += v.round.has_value();
  return n;
}

void print_report(std::ostream& out, const Scenario& sc, const Transcript& t) {
  const Report& r = t.report;
  out << "space " << sc.spec.space->id << ", " << t.rounds.size() << "/" << t.spec.horizon << " rounds\n";
  if (r.aborted) {
    out << "aborted: " << r.abort_reason << "\n";
    return;
  }
  out << (r.p2_wins ? "P2 wins" : "P1 wins");
  if (t.spec.target) {
    out << ": " << covered(r) << "/" << r.verdicts.size() << " challenges covered";
  } else {
    out << (r.p2_wins ? ": selections do not cover the space" : ": selections cover the battery");
  }
  out << "\n";
  if (r.uncovered) out << "uncovered: " << to_string(*r.uncovered) << "\n";
  if (r.exhibited) out << "point outside every selection: " << to_string(*r.exhibited) << "\n";
  if (sc.p2.value("ref", "") == "chq_p2_finite_open") {
    auto ledger = strategies::chq_measure_ledger(t);
    out << "measure ledger: per-round bound " << (ledger.per_round_ok ? "held" : "violated") << ", total "
        << to_string(ledger.total) << " (" << std::setprecision(6) << ledger.total.convert_to<double>() << ") "
        << (ledger.total_ok ? "< 1/2" : ">= 1/2") << "\n";
  }
}

}  // namespace

int cmd_spaces_list(const std::string& registry, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto reg = SpaceRegistry::load(registry);
    out << std::left << std::setw(20) << "id" << std::setw(14) << "kind" << std::setw(4) << "T1" << std::setw(5)
        << "reg" << std::setw(5) << "2nd" << std::setw(22) << "batteries p/f/k/rk"
        << "witnesses\n";
    for (const auto& id : reg.ids()) {
      auto s = reg.get(id);
      const auto& b = s->batteries;
      std::string counts = std::to_string(b.points.size()) + "/" + std::to_string(b.finite_sets.size()) + "/" +
                           std::to_string(b.compacts.size()) + "/" + std::to_string(b.relcompacts.size());
      std::string ws;
      for (const auto& [name, w] : s->witnesses) {
        ws += (ws.empty() ? "" : ", ") + name + " (" + witness_kind_name(w.kind) + ")";
      }
      auto yn = [](bool v) { return v ? "y" : "n"; };
      out << std::setw(20) << id << std::setw(14) << space_kind_name(s->kind) << std::setw(4) << yn(s->flags.t1)
          << std::setw(5) << yn(s->flags.regular) << std::setw(5) << yn(s->flags.second_countable) << std::setw(22)
          << counts << (ws.empty() ? "-" : ws) << "\n";
    }
    return kExitOk;
  });
}

int cmd_play(const std::string& registry, const std::string& scenario, Human human, const std::string& out_path,
             Console& io, std::ostream& err) {
  return guarded(err, [&] {
    auto reg = SpaceRegistry::load(registry);
    auto sc = load_scenario(scenario, reg);
    auto t = play_scenario(sc, reg, sc.spec.seed, human, &io);
    std::string path = out_path.empty() ? sc.name + ".jsonl" : out_path;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::Config, "cannot write " + path);
    f << to_jsonl(t);
    print_report(io.out, sc, t);
    io.out << "transcript: " << path << "\n";
    return t.report.aborted ? kExitAborted : kExitOk;
  });
}

int cmd_verify(const std::string& registry, const std::vector<std::string>& names, bool as_json, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    std::vector<std::string> run = names;
    if (run.empty()) {
      for (const auto& s : suites()) run.push_back(s.name);
    }
    for (const auto& n : run) {
      bool known = false;
      for (const auto& s : suites()) known = known || s.name == n;
      if (!known) throw Error(Errc::Config, "unknown suite '" + n + "'");
    }
    auto reg = SpaceRegistry::load(registry);
    bool ok = true;
    double total = 0;
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (const auto& n : run) {
      auto r = run_suite(n, reg);
      ok = ok && r.ok;
      total += r.seconds;
      if (as_json) {
        results.push_back(to_json(r));
        continue;
      }
      char head[128];
      std::snprintf(head, sizeof head, "criterion %d %-14s %s  %.2fs", r.criterion, r.suite.c_str(),
                    r.ok ? "PASS" : "FAIL", r.seconds);
      out << head << "\n";
      for (const auto& c : r.checks) {
        out << "  " << (c.ok ? "ok    " : "FAILED") << " " << c.name;
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
      }
    }
    if (as_json) {
      out << nlohmann::ordered_json{{"ok", ok}, {"seconds", total}, {"suites", results}}.dump(2) << "\n";
    } else {
      char tail[64];
      std::snprintf(tail, sizeof tail, "%s in %.2fs", ok ? "all passed" : "FAILURES", total);
      out << tail << "\n";
    }
    return ok ? kExitOk : kExitAborted;
  });
}

int cmd_duel(const std::string& registry, const std::string& scenario, std::size_t seeds, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    auto reg = SpaceRegistry::load(registry);
    auto sc = load_scenario(scenario, reg);
    std::size_t wins = 0, aborted = 0;
    for (std::size_t i = 0; i < seeds; ++i) {
      std::uint64_t seed = sc.spec.seed + i;
      auto t = play_scenario(sc, reg, seed);
      const Report& r = t.report;
      out << "seed " << seed << ": ";
      if (r.aborted) {
        ++aborted;
        out << "aborted: " << r.abort_reason << "\n";
        continue;
      }
      wins += r.p2_wins;
      out << (r.p2_wins ? "P2 wins" : "P1 wins");
      if (t.spec.target) out << ", " << covered(r) << "/" << r.verdicts.size() << " covered";
      if (r.uncovered) out << ", uncovered " << to_string(*r.uncovered);
      if (r.exhibited) out << ", outside " << to_string(*r.exhibited);
      out << "\n";
    }
    out << sc.name << ": P2 won " << wins << "/" << seeds;
    if (aborted) out << ", " << aborted << " aborted";
    out << "\n";
    return aborted ? kExitAborted : kExitOk;
  });
}

}  // namespace selgame::cli
