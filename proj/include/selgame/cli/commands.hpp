#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "selgame/cli/scenario.hpp"

namespace selgame::cli {

// Exit codes: 0 success, 2 configuration error, 3 aborted game or failed check.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitAborted = 3;

int cmd_spaces_list(const std::string& registry, std::ostream& out, std::ostream& err);

// Writes the transcript to `out_path`, or `<scenario name>.jsonl` when empty.
int cmd_play(const std::string& registry, const std::string& scenario, Human human, const std::string& out_path,
             Console& io, std::ostream& err);

// Empty `names` runs every suite.
int cmd_verify(const std::string& registry, const std::vector<std::string>& names, bool as_json, std::ostream& out,
               std::ostream& err);

int cmd_duel(const std::string& registry, const std::string& scenario, std::size_t seeds, std::ostream& out,
             std::ostream& err);

}  // namespace selgame::cli
