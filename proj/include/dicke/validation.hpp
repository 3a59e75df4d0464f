// Seeded self-check suites: closed forms against their numeric oracles and
// the state invariants along trajectories.

#pragma once

#include "dicke/qstate.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dicke {

struct ValidationOptions {
  std::uint64_t seed = 20240601;
  std::size_t oracle_states = 100;
  std::size_t shortcut_states = 10000;
  std::size_t class22_states = 10000;
  /// A user-supplied matrix checked against the density-matrix invariants first.
  std::optional<Matrix4c> input_state;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  /// Worst observed value of the suite's figure of merit.
  double metric = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct ValidationReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;
  bool passed() const;
  nlohmann::json to_json() const;
};

ValidationReport run_validation(const ValidationOptions& options = {});

}  // namespace dicke
