// One PASS/FAIL line per acceptance criterion; exit 1 if any fails.
#include <cstdio>
#include <iostream>
#include <string>

#include "selgame/cli/verify.hpp"
#include "selgame/error.hpp"

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  using namespace selgame;
  try {
    auto reg = topology::SpaceRegistry::load(topology::SpaceRegistry::default_path());
    bool all = true;
    for (const auto& s : cli::suites()) {
      auto r = cli::run_suite(s.name, reg);
      all = all && r.ok;
      std::printf("criterion %d %-14s %s (%.1fs)\n", s.criterion, s.name.c_str(), r.ok ? "PASS" : "FAIL", r.seconds);
      for (const auto& c : r.checks) {
        if (!c.ok || verbose) std::printf("    %s: %s: %s\n", c.ok ? "ok" : "failed", c.name.c_str(), c.detail.c_str());
      }
      std::fflush(stdout);
    }
    return all ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "acceptance: " << e.what() << "\n";
    return 1;
  }
}
