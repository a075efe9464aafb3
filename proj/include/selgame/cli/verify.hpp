#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "selgame/topology/registry.hpp"

namespace selgame::cli {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  int criterion = 0;
  bool ok = true;
  double seconds = 0;
  std::vector<CheckResult> checks;
};

struct SuiteInfo {
  std::string name;
  int criterion;
  std::string summary;
  double budget_seconds;
};

const std::vector<SuiteInfo>& suites();

// Throws Errc::Config for an unknown name. Exceptions inside a suite become a failed
// check, and so does a run slower than the suite's budget.
SuiteResult run_suite(const std::string& name, const topology::SpaceRegistry& reg);

nlohmann::ordered_json to_json(const SuiteResult& r);

}  // namespace selgame::cli
