// Acceptance runner: one line per check, nonzero exit when anything fails.
// Optional argv[1] overrides the RNG seed (default 7).

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <vector>

#include "tabcrys/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 7;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  std::vector<tabcrys::CheckResult> results = tabcrys::run_acceptance(seed);
  int failures = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const tabcrys::CheckResult& r = results[i];
    std::cout << "criterion " << (i + 1) << " [" << r.name << "]: "
              << (r.pass ? "PASS" : "FAIL") << " - " << r.detail << std::endl;
    if (!r.pass) ++failures;
  }
  if (failures != 0) std::cout << failures << " criteria failed (seed " << seed << ")" << std::endl;
  return failures == 0 ? 0 : 1;
}
