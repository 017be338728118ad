#pragma once

#include <cstddef>
#include <string>

#include "kiselman/counting.hpp"
#include "kiselman/elements.hpp"

namespace kiselman::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;

struct RunConfig {
  int n = 2;
  int m = 2;
  bool idempotents_only = false;
  std::string method = "monotone";  // endos: monotone | brute
  bool grid = false;
  bool brute_only = false;
  std::string what;  // export target
  std::string suite;
  std::string format = "table";  // table | json | csv
  std::string output_path;       // empty writes to stdout
  bool no_timestamp = false;
  int parallelism = 2;
  std::size_t max_elements = kDefaultElementCap;
  std::size_t max_rules = kDefaultMaxRules;
  int guard_bits = kDefaultGuardBits;
};

int cmd_elements(const RunConfig& cfg);
int cmd_endos(const RunConfig& cfg);
int cmd_count(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);
int cmd_export(const RunConfig& cfg);

}  // namespace kiselman::cli
