#pragma once
// End-to-end consistency battery behind `tabcrys verify all` and the
// acceptance test binary. Each check cross-validates one layer of the model
// against an independent computation (pinned small cases, classical dimension
// formulas, brute-force statistics, or coefficient identities) and reports a
// single pass/fail line. Deterministic for a fixed seed.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tabcrys {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // one-line summary of what was measured
};

std::vector<CheckResult> run_acceptance(std::uint64_t seed);

// A single named check from the battery (used by the focused CLI commands);
// nullopt when the name is unknown.
std::optional<CheckResult> run_check(const std::string& name, std::uint64_t seed);

}  // namespace tabcrys
