#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "selgame/cli/commands.hpp"
#include "selgame/topology/registry.hpp"

int main(int argc, char** argv) {
  using namespace selgame::cli;

  CLI::App app{"Selection games on countable models of topological spaces"};
  app.require_subcommand(1);

  auto* spaces = app.add_subcommand("spaces", "Inspect the space registry");
  spaces->require_subcommand(1);
  auto* list = spaces->add_subcommand("list", "One row per registry entry, sorted by id");

  std::string scenario, out_path, interactive;
  auto* play = app.add_subcommand("play", "Play a scenario, write its transcript and print the report");
  play->add_option("scenario", scenario, "Scenario JSON file")->required();
  play->add_option("--out", out_path, "Transcript path (default: <scenario name>.jsonl)");
  play->add_option("--interactive", interactive, "Play one side from the console")
      ->check(CLI::IsMember({"P1", "P2"}))
      ->expected(0, 1)
      ->default_str("P2");

  std::vector<std::string> suite_names;
  bool all = false, as_json = false;
  auto* verify = app.add_subcommand("verify", "Run acceptance suites");
  verify->add_option("suite", suite_names, "Suite names");
  verify->add_flag("--all", all, "Run every suite");
  verify->add_flag("--json", as_json, "Machine-readable summary");

  std::size_t seeds = 0;
  auto* duel = app.add_subcommand("duel", "Replay a scenario over consecutive seeds");
  duel->add_option("scenario", scenario, "Scenario JSON file")->required();
  duel->add_option("--seeds", seeds, "Number of seeds")->required()->check(CLI::Range(1, 100000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  const std::string registry = selgame::topology::SpaceRegistry::default_path();
  try {
    if (list->parsed()) return cmd_spaces_list(registry, std::cout, std::cerr);
    if (play->parsed()) {
      Human human = Human::None;
      if (play->count("--interactive")) human = interactive == "P1" ? Human::P1 : Human::P2;
      Console io{std::cin, std::cout};
      return cmd_play(registry, scenario, human, out_path, io, std::cerr);
    }
    if (verify->parsed()) {
      if (all == !suite_names.empty()) {
        std::cerr << "selgame: give suite names or --all\n";
        return kExitConfig;
      }
      return cmd_verify(registry, suite_names, as_json, std::cout, std::cerr);
    }
    if (duel->parsed()) return cmd_duel(registry, scenario, seeds, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "selgame: " << e.what() << "\n";
  }
  return kExitConfig;
}
