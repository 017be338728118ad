#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kiselman/counting.hpp"
#include "kiselman/elements.hpp"

namespace kiselman {

struct CheckResult {
  std::string id;
  std::string scope;
  bool pass = false;
  std::string counterexample;  // non-empty exactly when the check failed
  double seconds = 0.0;
};

struct VerificationReport {
  std::string suite;
  int max_n = 0;
  int guard_bits = 0;
  std::vector<CheckResult> checks;
  double wall_seconds = 0.0;

  bool all_passed() const {
    for (const CheckResult& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

struct VerifyOptions {
  // Largest rank the exhaustive suites run at; per-check ceilings still
  // apply on top (e.g. brute-force endomorphism checks stop at 4).
  int max_n = 3;
  // Bit budget for the counting grid (m*n <= guard_bits).
  int guard_bits = 20;
  int parallelism = 1;
  // Substring filter on check ids; empty runs everything.
  std::string suite;
  std::size_t max_rules = kDefaultMaxRules;
  std::size_t max_elements = kDefaultElementCap;
};

// Runs every invariant suite of every module at the configured scales and
// reports one line per property, with a serialized counterexample on any
// failure.
VerificationReport run_verification(const VerifyOptions& options);

// The ids run_verification knows, in execution order.
std::vector<std::string> verification_check_ids();

}  // namespace kiselman
