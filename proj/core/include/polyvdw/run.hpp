#pragma once

#include <string>

#include "polyvdw/config.hpp"

namespace polyvdw {

// Exit codes shared with the CLI.
inline constexpr int kExitFound = 0;
inline constexpr int kExitFailure = 1;   // law failures, oracle mismatch, bad verify
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNone = 3;      // no witness within bounds
inline constexpr int kExitBudget = 4;

struct RunResult {
  int exit_code = kExitFound;
  std::string json_report;  // deterministic for a fixed config modulo elapsed_ms
  std::string text_report;
};

// Dispatches on config.mode. Config errors surface as ConfigError before any
// search runs; the caller maps them to kExitConfig.
RunResult run(const RunConfig& config);

}  // namespace polyvdw
